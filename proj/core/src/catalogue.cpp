#include "leibcheck/catalogue.hpp"

#include "leibcheck/error.hpp"

#include "json.hpp"

#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace leibcheck {

using nlohmann::json;
using ojson = nlohmann::ordered_json;

namespace {

[[noreturn]] void field_error(const std::string& where, const std::string& msg) {
    throw Error(Errc::SyntaxError, where + ": " + msg);
}

const json& need(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object() || !obj.contains(key)) field_error(where, std::string("missing field '") + key + "'");
    return obj.at(key);
}

std::string need_string(const json& v, const std::string& where) {
    if (!v.is_string()) field_error(where, "expected a string");
    return v.get<std::string>();
}

std::size_t need_index(const json& v, const std::string& where) {
    if (!v.is_number_integer()) field_error(where, "expected an integer");
    auto x = v.get<long long>();
    if (x < 0) field_error(where, "negative value");
    return static_cast<std::size_t>(x);
}

CoeffExpr need_expr(const json& v, const std::string& where) {
    std::string s = need_string(v, where);
    try {
        return CoeffExpr::parse(s);
    } catch (const Error& e) {
        field_error(where, e.what());
    }
}

std::string entry_where(std::size_t k, const json& e) {
    std::string w = "entries[" + std::to_string(k) + "]";
    if (e.is_object() && e.contains("name") && e["name"].is_string()) w += " (" + e["name"].get<std::string>() + ")";
    return w;
}

const char* kClaimKeys[] = {"dim_A2", "dim_A3", "dim_A4", "dim_leib", "dim_center"};

std::optional<std::size_t>& claim_slot(ClaimedSignature& c, const std::string& key) {
    if (key == "dim_A2") return c.dim_A2;
    if (key == "dim_A3") return c.dim_A3;
    if (key == "dim_A4") return c.dim_A4;
    if (key == "dim_leib") return c.dim_leib;
    return c.dim_center;
}

std::optional<std::size_t> claim_value(const ClaimedSignature& c, const std::string& key) {
    return claim_slot(const_cast<ClaimedSignature&>(c), key);
}

}  // namespace

bool is_documented_duplicate(const std::string& name) { return name == "A_246a" || name == "A_246b"; }

const CatalogueEntry& Catalogue::entry(const std::string& name) const {
    for (const auto& e : entries)
        if (e.name == name) return e;
    throw Error(Errc::UnknownEntry, "no catalogue entry named '" + name + "'");
}

const Theorem& Catalogue::theorem(const std::string& id) const {
    for (const auto& t : theorems)
        if (t.id == id) return t;
    throw Error(Errc::UnknownEntry, "no theorem '" + id + "'");
}

Catalogue parse_catalogue(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1;
        for (std::size_t k = 0; k < e.byte && k < text.size(); ++k)
            if (text[k] == '\n') ++line;
        throw Error(Errc::SyntaxError, "line " + std::to_string(line) + ": " + e.what());
    }
    Catalogue cat;
    cat.dimension = need_index(need(root, "dimension", "catalogue"), "dimension");
    const std::size_t n = cat.dimension;

    std::set<std::string> theorem_ids;
    const json& ths = need(root, "theorems", "catalogue");
    if (!ths.is_array()) field_error("theorems", "expected an array");
    for (std::size_t k = 0; k < ths.size(); ++k) {
        std::string w = "theorems[" + std::to_string(k) + "]";
        Theorem t;
        t.id = need_string(need(ths[k], "id", w), w + ".id");
        if (ths[k].contains("title")) t.title = need_string(ths[k]["title"], w + ".title");
        const json& cl = need(ths[k], "claimed", w);
        for (auto it = cl.begin(); it != cl.end(); ++it) {
            if (it.key() == "leib_equals_center") {
                if (!it->is_boolean()) field_error(w + ".claimed.leib_equals_center", "expected a boolean");
                t.claimed.leib_equals_center = it->get<bool>();
                continue;
            }
            bool known = false;
            for (const char* key : kClaimKeys) known = known || it.key() == key;
            if (!known) field_error(w + ".claimed", "unknown claim '" + it.key() + "'");
            std::size_t v = need_index(*it, w + ".claimed." + it.key());
            if (v > n) throw Error(Errc::IndexOutOfRange, w + ".claimed." + it.key() + " exceeds the dimension");
            claim_slot(t.claimed, it.key()) = v;
        }
        if (!theorem_ids.insert(t.id).second) throw Error(Errc::DuplicateName, "theorem id '" + t.id + "' repeats");
        cat.theorems.push_back(std::move(t));
    }

    std::set<std::string> names;
    const json& ents = need(root, "entries", "catalogue");
    if (!ents.is_array()) field_error("entries", "expected an array");
    for (std::size_t k = 0; k < ents.size(); ++k) {
        const json& je = ents[k];
        std::string w = entry_where(k, je);
        CatalogueEntry e;
        e.name = need_string(need(je, "name", w), w + ".name");
        if (!names.insert(e.name).second) throw Error(Errc::DuplicateName, w + ": name repeats");
        e.theorem_id = need_string(need(je, "theorem", w), w + ".theorem");
        if (!theorem_ids.count(e.theorem_id)) field_error(w + ".theorem", "unknown theorem '" + e.theorem_id + "'");
        for (const auto& p : need(je, "params", w)) e.params.push_back(need_string(p, w + ".params"));
        std::set<std::string> declared(e.params.begin(), e.params.end());
        auto check_params = [&](const CoeffExpr& x, const std::string& where) {
            for (const auto& name : x.params())
                if (!declared.count(name)) field_error(where, "undeclared parameter '" + name + "'");
        };
        const json& cons = need(je, "constraints", w);
        for (std::size_t c = 0; c < cons.size(); ++c) {
            std::string cw = w + ".constraints[" + std::to_string(c) + "]";
            Constraint con;
            if (cons[c].is_array()) {
                for (const auto& x : cons[c]) con.push_back(need_expr(x, cw));
                if (con.empty()) field_error(cw, "empty constraint tuple");
            } else {
                con.push_back(need_expr(cons[c], cw));
            }
            for (const auto& x : con) check_params(x, cw);
            e.constraints.push_back(std::move(con));
        }
        const json& prods = need(je, "products", w);
        for (std::size_t p = 0; p < prods.size(); ++p) {
            std::string pw = w + ".products[" + std::to_string(p) + "]";
            EntryProduct ep;
            ep.left = need_index(need(prods[p], "left", pw), pw + ".left");
            ep.right = need_index(need(prods[p], "right", pw), pw + ".right");
            if (ep.left < 1 || ep.left > n || ep.right < 1 || ep.right > n)
                throw Error(Errc::IndexOutOfRange, pw + ": factor index outside 1.." + std::to_string(n));
            for (const auto& term : need(prods[p], "value", pw)) {
                if (!term.is_array() || term.size() != 2) field_error(pw + ".value", "expected [index, expr] pairs");
                std::size_t out = need_index(term[0], pw + ".value");
                if (out < 1 || out > n)
                    throw Error(Errc::IndexOutOfRange, pw + ": output index outside 1.." + std::to_string(n));
                CoeffExpr x = need_expr(term[1], pw + ".value");
                check_params(x, pw + ".value");
                ep.terms.emplace_back(out, std::move(x));
            }
            e.products.push_back(std::move(ep));
        }
        if (je.contains("iso_criteria")) {
            const json& ic = je["iso_criteria"];
            IsoCriteria crit;
            crit.text = need_string(need(ic, "text", w + ".iso_criteria"), w + ".iso_criteria.text");
            if (ic.contains("relation")) crit.relation = need_string(ic["relation"], w + ".iso_criteria.relation");
            e.iso_criteria = std::move(crit);
        }
        if (je.contains("flags"))
            for (const auto& f : je["flags"]) e.flags.push_back(need_string(f, w + ".flags"));
        cat.entries.push_back(std::move(e));
    }
    return cat;
}

std::string serialize_catalogue(const Catalogue& cat) {
    std::ostringstream os;
    os << "{\n  \"format\": \"leibcheck-catalogue/1\",\n  \"dimension\": " << cat.dimension << ",\n";
    os << "  \"theorems\": [\n";
    for (std::size_t k = 0; k < cat.theorems.size(); ++k) {
        const auto& t = cat.theorems[k];
        ojson claimed = ojson::object();
        for (const char* key : kClaimKeys)
            if (auto v = claim_value(t.claimed, key)) claimed[key] = *v;
        if (t.claimed.leib_equals_center) claimed["leib_equals_center"] = *t.claimed.leib_equals_center;
        ojson jt = {{"id", t.id}, {"title", t.title}, {"claimed", claimed}};
        os << "    " << jt.dump() << (k + 1 < cat.theorems.size() ? ",\n" : "\n");
    }
    os << "  ],\n  \"entries\": [\n";
    for (std::size_t k = 0; k < cat.entries.size(); ++k) {
        const auto& e = cat.entries[k];
        ojson cons = ojson::array();
        for (const auto& c : e.constraints) {
            if (c.size() == 1) {
                cons.push_back(c[0].to_string());
            } else {
                ojson tuple = ojson::array();
                for (const auto& x : c) tuple.push_back(x.to_string());
                cons.push_back(tuple);
            }
        }
        os << "    {\n      \"name\": " << ojson(e.name).dump() << ",\n      \"theorem\": " << ojson(e.theorem_id).dump()
           << ",\n      \"params\": " << ojson(e.params).dump() << ",\n      \"constraints\": " << cons.dump()
           << ",\n      \"products\": [\n";
        for (std::size_t p = 0; p < e.products.size(); ++p) {
            const auto& ep = e.products[p];
            ojson val = ojson::array();
            for (const auto& [out, x] : ep.terms) val.push_back(ojson::array({out, x.to_string()}));
            ojson jp = {{"left", ep.left}, {"right", ep.right}, {"value", val}};
            os << "        " << jp.dump() << (p + 1 < e.products.size() ? ",\n" : "\n");
        }
        os << "      ]";
        if (e.iso_criteria) {
            ojson ic = {{"text", e.iso_criteria->text}};
            if (e.iso_criteria->relation) ic["relation"] = *e.iso_criteria->relation;
            os << ",\n      \"iso_criteria\": " << ic.dump();
        }
        if (!e.flags.empty()) os << ",\n      \"flags\": " << ojson(e.flags).dump();
        os << "\n    }" << (k + 1 < cat.entries.size() ? ",\n" : "\n");
    }
    os << "  ]\n}\n";
    return os.str();
}

Catalogue load_catalogue(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::SyntaxError, "cannot open catalogue '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_catalogue(ss.str());
}

std::string content_digest(const std::string& text) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

bool admissible(const CatalogueEntry& e, const ParamAssignment& p) {
    for (const auto& name : e.params)
        if (!p.count(name)) return false;
    for (const auto& c : e.constraints) {
        bool some_nonzero = false;
        for (const auto& x : c) {
            try {
                if (!x.eval(p).is_zero()) some_nonzero = true;
            } catch (const Error& err) {
                if (err.code() != Errc::DivisionByZero) throw;
                return false;
            }
        }
        if (!some_nonzero) return false;
    }
    return true;
}

namespace {

// The shared candidate stream for every parameter.
const std::vector<Gaussian>& candidate_stream() {
    static const std::vector<Gaussian> values = [] {
        const char* lits[] = {"0", "1", "2", "3", "-2", "i", "1+i", "-1", "1/2", "5", "-3", "2*i", "1-i",
                              "7/3", "-1/3", "3+2*i", "-i", "4", "-5/2", "2-3*i", "11", "-7", "1/5", "13/4"};
        std::vector<Gaussian> v;
        for (const char* s : lits) v.push_back(CoeffExpr::parse(s).eval());
        return v;
    }();
    return values;
}

}  // namespace

// Tuples are enumerated by increasing sum of stream indices, lexicographic
// inside each level, so the one-parameter case walks the stream in order.
std::vector<ParamAssignment> sample_params(const CatalogueEntry& e, std::size_t count) {
    if (e.params.empty()) {
        if (!admissible(e, {})) throw Error(Errc::NoAdmissiblePoint, e.name + ": constraints fail without parameters");
        return {ParamAssignment{}};
    }
    const auto& stream = candidate_stream();
    const std::size_t m = e.params.size();
    const std::size_t L = stream.size();
    std::vector<ParamAssignment> out;
    for (std::size_t level = 0; level <= m * (L - 1) && out.size() < count; ++level) {
        std::vector<std::size_t> idx(m, 0);
        // enumerate compositions of `level` into m parts each < L, lexicographically
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t pos, std::size_t left) {
            if (out.size() >= count) return;
            if (pos + 1 == m) {
                if (left >= L) return;
                idx[pos] = left;
                ParamAssignment p;
                for (std::size_t k = 0; k < m; ++k) p[e.params[k]] = stream[idx[k]];
                if (admissible(e, p)) out.push_back(std::move(p));
                return;
            }
            for (std::size_t v = 0; v <= left && v < L; ++v) {
                idx[pos] = v;
                rec(pos + 1, left - v);
            }
        };
        rec(0, level);
    }
    if (out.size() < count)
        throw Error(Errc::NoAdmissiblePoint, e.name + ": only " + std::to_string(out.size()) + " admissible samples");
    return out;
}

LeibnizAlgebra<Gaussian> instantiate(const CatalogueEntry& e, const ParamAssignment& p, std::size_t n) {
    if (!admissible(e, p))
        throw Error(Errc::ConstraintViolated, e.name + " at {" + assignment_to_string(p) + "}");
    std::vector<Product<Gaussian>> prods;
    for (const auto& ep : e.products) {
        Vec<Gaussian> v(n, Gaussian());
        for (const auto& [out, x] : ep.terms) v[out - 1] += x.eval(p);
        prods.push_back({ep.left - 1, ep.right - 1, std::move(v)});
    }
    return LeibnizAlgebra<Gaussian>(n, Gaussian(), prods);
}

bool EntryReport::passed() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

EntryReport verify_entry(const Catalogue& cat, const CatalogueEntry& e, const ParamAssignment& p) {
    EntryReport rep;
    rep.entry = e.name;
    rep.params = p;
    auto add = [&](std::string name, bool pass, std::string detail = {}) {
        rep.checks.push_back({std::move(name), pass, std::move(detail)});
    };
    LeibnizAlgebra<Gaussian> a;
    try {
        a = instantiate(e, p, cat.dimension);
    } catch (const Error& err) {
        add("instantiate", false, err.what());
        return rep;
    }
    auto lc = check_leibniz(a);
    add("leibniz", lc.ok,
        lc.ok ? "" : "triple (" + std::to_string(lc.i + 1) + "," + std::to_string(lc.j + 1) + "," + std::to_string(lc.k + 1) + ")");

    rep.signature = signature(a);
    const auto& sig = rep.signature;
    add("nilpotent", sig.lower_central_dims.back() == 0);
    add("non_lie", sig.dim_leib >= 1, "dim Leib = " + std::to_string(sig.dim_leib));
    add("center_in_A2", sig.dim_center_cap_A2 == sig.dim_center,
        "dim Z = " + std::to_string(sig.dim_center) + ", dim Z cap A2 = " + std::to_string(sig.dim_center_cap_A2));

    const auto& claimed = cat.theorem(e.theorem_id).claimed;
    auto claim = [&](const char* key, std::size_t computed) {
        if (auto v = claim_value(claimed, key))
            add(std::string("claim.") + key, *v == computed,
                "claimed " + std::to_string(*v) + ", computed " + std::to_string(computed));
    };
    claim("dim_A2", sig.dim_power(2));
    claim("dim_A3", sig.dim_power(3));
    claim("dim_A4", sig.dim_power(4));
    claim("dim_leib", sig.dim_leib);
    claim("dim_center", sig.dim_center);
    if (claimed.leib_equals_center) {
        auto leib = leib_ideal(a);
        auto z = annihilators(a).center;
        bool eq = leib == z;
        add("claim.leib_equals_center", eq == *claimed.leib_equals_center,
            std::string("claimed ") + (*claimed.leib_equals_center ? "true" : "false") + ", computed " +
                (eq ? "true" : "false"));
    }

    rep.bounds = bounds_report(sig);
    add("lemma4", rep.bounds.lemma4.holds, "bound " + std::to_string(rep.bounds.lemma4.bound));
    add("lemma5", rep.bounds.lemma5.holds,
        "bounds " + std::to_string(rep.bounds.lemma5.bound_i) + "/" + std::to_string(rep.bounds.lemma5.bound_ii));

    if (in_v_form_setting(a)) {
        auto vf = extract_v_form(a);
        auto canon = congruence_canonical(vf.m);
        rep.v_form = canon.kind;
        add("v_form_not_skew", canon.kind.tag != FormKind::Skew_i, canon.kind.to_string());
    }
    return rep;
}

std::pair<std::string, ParamAssignment> parse_entry_ref(const std::string& ref) {
    auto colon = ref.find(':');
    if (colon == std::string::npos) return {ref, {}};
    return {ref.substr(0, colon), parse_assignment(std::string_view(ref).substr(colon + 1))};
}

}  // namespace leibcheck
