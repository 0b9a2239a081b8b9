#pragma once

#include "leibcheck/algebra.hpp"

#include <optional>
#include <string>

namespace leibcheck {

using GMatrix = Matrix<Gaussian>;
using QMatrix = Matrix<QuadExt>;

// The 2x2 congruence types:
//   (i)   [[0,1],[-1,0]]   (ii) [[1,0],[0,0]]   (iii) I
//   (iv)  [[0,1],[-1,1]]   (v)  [[0,1],[c,0]], c != 1, -1
enum class FormKind { Zero, Skew_i, SymRank1_ii, SymRank2_iii, Mixed_iv, MixedC_v };

const char* form_kind_name(FormKind k);

struct CanonicalKind {
    FormKind tag = FormKind::Zero;
    std::optional<QuadExt> c;  // only for MixedC_v

    std::string to_string() const;
};

// Among {c, 1/c} the stored representative is the one with the larger norm;
// ties (|c| = 1) and extension values fall back to the lexicographic order.
QuadExt normalize_c(const QuadExt& c);

QMatrix canonical_matrix(const CanonicalKind& kind);

struct Canonicalization {
    CanonicalKind kind;
    QMatrix q;                          // q^T M q == canonical_matrix(kind)
    std::optional<Gaussian> extension;  // d when q needed sqrt(d) outside Q(i)
};

Canonicalization congruence_canonical(const GMatrix& m);

bool congruent(const GMatrix& m1, const GMatrix& m2);

// Symmetric and skew ranks; both are congruence invariants.
std::size_t symmetric_rank(const GMatrix& m);
std::size_t skew_rank(const GMatrix& m);

struct VForm {
    GMatrix m;                        // 2x2 form on the complement V of A^2
    std::vector<Vec<Gaussian>> basis;  // v1, v2, A^2 basis ending with the Leib generator
};

// Requires dim A^2 = n - 2, dim Leib = 1 and nilpotency; throws
// HypothesisViolation otherwise.
VForm extract_v_form(const LeibnizAlgebra<Gaussian>& a);

bool in_v_form_setting(const LeibnizAlgebra<Gaussian>& a);

}  // namespace leibcheck
