#include "leibcheck/bilinear.hpp"

#include "leibcheck/error.hpp"

namespace leibcheck {

namespace {

QMatrix lift(const GMatrix& m) {
    return map_matrix(m, QuadExt(), [](const Gaussian& g) { return QuadExt(g); });
}

QMatrix mat2(const QuadExt& a, const QuadExt& b, const QuadExt& c, const QuadExt& d) {
    QMatrix m(2, 2, QuadExt());
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
}

QMatrix columns(const Vec<QuadExt>& u, const Vec<QuadExt>& v) { return mat2(u[0], v[0], u[1], v[1]); }

QuadExt form(const QMatrix& s, const Vec<QuadExt>& x, const Vec<QuadExt>& y) {
    QuadExt r;
    for (std::size_t a = 0; a < 2; ++a)
        for (std::size_t b = 0; b < 2; ++b) r += x[a] * s(a, b) * y[b];
    return r;
}

QuadExt det2(const QMatrix& m) { return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0); }

// Root of a Q(i) value, recording the generator when one is needed.
QuadExt root(const QuadExt& x, std::optional<Gaussian>& ext) {
    if (!x.in_base()) throw Error(Errc::FieldMismatch, "nested square root requested");
    auto r = sqrt_in_field(x.a());
    if (!r.in_base) ext = *r.value.d();
    return r.value;
}

bool is_canonical_fixed_point(const GMatrix& m, CanonicalKind& kind) {
    auto eq = [&](long a, long b, long c, long d) {
        return m(0, 0) == Gaussian(a) && m(0, 1) == Gaussian(b) && m(1, 0) == Gaussian(c) && m(1, 1) == Gaussian(d);
    };
    if (eq(0, 0, 0, 0)) kind = {FormKind::Zero, {}};
    else if (eq(0, 1, -1, 0)) kind = {FormKind::Skew_i, {}};
    else if (eq(1, 0, 0, 0)) kind = {FormKind::SymRank1_ii, {}};
    else if (eq(1, 0, 0, 1)) kind = {FormKind::SymRank2_iii, {}};
    else if (eq(0, 1, -1, 1)) kind = {FormKind::Mixed_iv, {}};
    else if (m(0, 0).is_zero() && m(1, 1).is_zero() && m(0, 1) == Gaussian(1) && !(m(1, 0) == Gaussian(1)) &&
             !(m(1, 0) == Gaussian(-1)) && normalize_c(QuadExt(m(1, 0))) == QuadExt(m(1, 0)))
        kind = {FormKind::MixedC_v, QuadExt(m(1, 0))};
    else
        return false;
    return true;
}

// q with q^T s q diagonal, over Q(i).
QMatrix diagonalize(const QMatrix& s) {
    QMatrix q = QMatrix::identity(2, QuadExt());
    QMatrix cur = s;
    if (cur(0, 0).is_zero()) {
        if (!cur(1, 1).is_zero()) {
            q = mat2(0, 1, 1, 0);
        } else if (!cur(0, 1).is_zero()) {
            q = mat2(1, 0, 1, 1);
        } else {
            return q;  // already diagonal (zero)
        }
        cur = q.transpose() * s * q;
    }
    QMatrix e = mat2(1, -cur(0, 1) / cur(0, 0), 0, 1);
    return q * e;
}

}  // namespace

const char* form_kind_name(FormKind k) {
    switch (k) {
        case FormKind::Zero: return "zero";
        case FormKind::Skew_i: return "(i)";
        case FormKind::SymRank1_ii: return "(ii)";
        case FormKind::SymRank2_iii: return "(iii)";
        case FormKind::Mixed_iv: return "(iv)";
        case FormKind::MixedC_v: return "(v)";
    }
    return "?";
}

std::string CanonicalKind::to_string() const {
    std::string s = form_kind_name(tag);
    if (c) s += " c=" + c->to_string();
    return s;
}

QuadExt normalize_c(const QuadExt& c) {
    if (c.is_zero()) return c;  // [[0,1],[0,0]] has no partner
    QuadExt inv = c.inv();
    if (c.in_base() && inv.in_base()) {
        Rational nc = c.a().norm(), ni = inv.a().norm();
        if (nc != ni) return nc > ni ? c : inv;
    }
    return quad_less(inv, c) ? inv : c;
}

QMatrix canonical_matrix(const CanonicalKind& kind) {
    switch (kind.tag) {
        case FormKind::Zero: return mat2(0, 0, 0, 0);
        case FormKind::Skew_i: return mat2(0, 1, -1, 0);
        case FormKind::SymRank1_ii: return mat2(1, 0, 0, 0);
        case FormKind::SymRank2_iii: return mat2(1, 0, 0, 1);
        case FormKind::Mixed_iv: return mat2(0, 1, -1, 1);
        case FormKind::MixedC_v: return mat2(0, 1, *kind.c, 0);
    }
    throw Error(Errc::HypothesisViolation, "unknown form kind");
}

std::size_t symmetric_rank(const GMatrix& m) { return rank(m + m.transpose()); }

std::size_t skew_rank(const GMatrix& m) {
    GMatrix neg = map_matrix(m.transpose(), Gaussian(), [](const Gaussian& g) { return -g; });
    return rank(m + neg);
}

Canonicalization congruence_canonical(const GMatrix& gm) {
    if (gm.rows() != 2 || gm.cols() != 2) throw Error(Errc::DimensionMismatch, "form must be 2x2");
    Canonicalization out;
    out.q = QMatrix::identity(2, QuadExt());
    if (is_canonical_fixed_point(gm, out.kind)) return out;

    const QMatrix m = lift(gm);
    const QuadExt half = QuadExt(Gaussian(Rational(1, 2)));
    QMatrix s = mat2(m(0, 0), half * (m(0, 1) + m(1, 0)), half * (m(0, 1) + m(1, 0)), m(1, 1));
    const QuadExt k = half * (m(0, 1) - m(1, 0));
    const bool sym_zero = s.is_zero();
    std::optional<Gaussian> ext;

    if (k.is_zero()) {
        QMatrix q1 = diagonalize(s);
        QMatrix d = q1.transpose() * s * q1;
        QuadExt a = d(0, 0), b = d(1, 1);
        if (b.is_zero()) {
            out.kind = {FormKind::SymRank1_ii, {}};
            out.q = q1 * mat2(QuadExt(1) / root(a, ext), 0, 0, 1);
        } else {
            // <a,b> is hyperbolic over Q(i)(sqrt(ab)): v=(s, i a), w=(s, -i a)
            // are isotropic with f(v,w) = 2 a^2 b.
            out.kind = {FormKind::SymRank2_iii, {}};
            QuadExt t = root(a * b, ext);
            QuadExt ia = QuadExt(Gaussian::i()) * a;
            QuadExt h = QuadExt(2) * a * a * b;
            QMatrix vw = mat2(t, t / h, ia, -ia / h);
            QuadExt ii = QuadExt(Gaussian::i());
            QMatrix hyp_to_id = mat2(1, ii, half, -ii * half);
            out.q = q1 * vw * hyp_to_id;
        }
    } else if (sym_zero) {
        out.kind = {FormKind::Skew_i, {}};
        out.q = mat2(1, 0, 0, QuadExt(1) / k);
    } else if (det2(s).is_zero()) {
        out.kind = {FormKind::Mixed_iv, {}};
        // q1 spans ker S; q2 a unit vector with S(q2,q2) != 0
        Vec<QuadExt> q1 = s(0, 0).is_zero() && s(0, 1).is_zero() ? Vec<QuadExt>{1, 0}
                                                                  : Vec<QuadExt>{-s(0, 1), s(0, 0)};
        if (q1[0].is_zero() && q1[1].is_zero()) q1 = {-s(1, 1), s(1, 0)};
        Vec<QuadExt> q2 = s(0, 0).is_zero() ? Vec<QuadExt>{0, 1} : Vec<QuadExt>{1, 0};
        QuadExt sigma = form(s, q2, q2);
        QuadExt r = QuadExt(1) / root(sigma, ext);
        q2 = {q2[0] * r, q2[1] * r};
        QuadExt scale = QuadExt(1) / (k * det2(columns(q1, q2)));
        q1 = {q1[0] * scale, q1[1] * scale};
        out.q = columns(q1, q2);
    } else {
        out.kind.tag = FormKind::MixedC_v;
        Vec<QuadExt> v1, v2;
        if (!s(0, 0).is_zero()) {
            QuadExt t = root(-det2(s), ext);
            v1 = {-s(0, 1) + t, s(0, 0)};
            v2 = {-s(0, 1) - t, s(0, 0)};
        } else {
            v1 = {1, 0};
            v2 = {-s(1, 1), QuadExt(2) * s(0, 1)};
        }
        QuadExt sigma = form(s, v1, v2);
        QuadExt kappa = k * det2(columns(v1, v2));
        if ((sigma + kappa).is_zero()) {
            std::swap(v1, v2);
            kappa = -kappa;
        }
        QuadExt c = (sigma - kappa) / (sigma + kappa);
        if (!(normalize_c(c) == c)) {
            std::swap(v1, v2);
            kappa = -kappa;
            c = (sigma - kappa) / (sigma + kappa);
        }
        QuadExt scale = QuadExt(1) / (sigma + kappa);
        out.kind.c = c;
        out.q = columns(v1, {v2[0] * scale, v2[1] * scale});
    }
    out.extension = ext;
    if (!(out.q.transpose() * m * out.q == canonical_matrix(out.kind)))
        throw Error(Errc::HypothesisViolation, "internal: congruence does not reach the canonical form");
    return out;
}

bool congruent(const GMatrix& m1, const GMatrix& m2) {
    auto a = congruence_canonical(m1).kind;
    auto b = congruence_canonical(m2).kind;
    if (a.tag != b.tag) return false;
    if (a.tag != FormKind::MixedC_v) return true;
    try {
        return *a.c == *b.c || *a.c == b.c->inv();
    } catch (const Error&) {
        return false;  // values in different quadratic extensions
    }
}

bool in_v_form_setting(const LeibnizAlgebra<Gaussian>& a) {
    const std::size_t n = a.dim();
    if (n < 3) return false;
    auto full = Subspace<Gaussian>::full(n, Gaussian());
    if (subspace_product(a, full, full).dim() != n - 2) return false;
    if (leib_ideal(a).dim() != 1) return false;
    return series(a, SeriesKind::LowerCentral).dims.back() == 0;
}

VForm extract_v_form(const LeibnizAlgebra<Gaussian>& a) {
    if (!in_v_form_setting(a))
        throw Error(Errc::HypothesisViolation, "extract_v_form needs dim A^2 = n-2, dim Leib = 1, nilpotent");
    const std::size_t n = a.dim();
    auto full = Subspace<Gaussian>::full(n, Gaussian());
    auto a2 = subspace_product(a, full, full);
    Vec<Gaussian> en = leib_ideal(a).vectors().front();

    // A^2 basis that ends with the Leib generator
    std::vector<Vec<Gaussian>> a2_basis;
    auto span_so_far = Subspace<Gaussian>::span(n, {en}, Gaussian());
    for (const auto& row : a2.vectors()) {
        if (span_so_far.contains(row)) continue;
        a2_basis.push_back(row);
        span_so_far = sum(span_so_far, Subspace<Gaussian>::span(n, {row}, Gaussian()));
    }
    a2_basis.push_back(en);

    VForm out;
    for (auto c : a2.complement_coordinates()) out.basis.push_back(unit_vector(n, c, Gaussian()));
    for (const auto& v : a2_basis) out.basis.push_back(v);
    GMatrix change = GMatrix::from_columns(out.basis, n, Gaussian());
    GMatrix to_adapted = invert(change);

    out.m = GMatrix(2, 2, Gaussian());
    for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t y = 0; y < 2; ++y) {
            Vec<Gaussian> coords = to_adapted.apply(a.bracket(out.basis[x], out.basis[y]));
            out.m(x, y) = coords[n - 1];
        }
    return out;
}

}  // namespace leibcheck
