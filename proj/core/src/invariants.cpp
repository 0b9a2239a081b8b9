#include "leibcheck/invariants.hpp"

#include "json.hpp"

#include <sstream>

namespace leibcheck {

namespace {

std::string list_str(const std::vector<std::size_t>& v) {
    std::string s = "[";
    for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
    return s + "]";
}

}  // namespace

std::string InvariantSignature::first_difference(const InvariantSignature& o) const {
    if (n != o.n) return "n";
    if (lower_central_dims != o.lower_central_dims) return "lower_central_dims";
    if (derived_dims != o.derived_dims) return "derived_dims";
    if (dim_leib != o.dim_leib) return "dim_leib";
    if (dim_center != o.dim_center) return "dim_center";
    if (dim_left_ann != o.dim_left_ann) return "dim_left_ann";
    if (dim_right_ann != o.dim_right_ann) return "dim_right_ann";
    if (dim_center_cap_A2 != o.dim_center_cap_A2) return "dim_center_cap_A2";
    if (dim_leib_cap_A3 != o.dim_leib_cap_A3) return "dim_leib_cap_A3";
    if (dim_A2A != o.dim_A2A) return "dim_A2A";
    if (dim_A2A2 != o.dim_A2A2) return "dim_A2A2";
    if (dim_der != o.dim_der) return "dim_der";
    if (is_lie != o.is_lie) return "is_lie";
    return {};
}

std::string InvariantSignature::to_string() const {
    std::ostringstream os;
    os << "n=" << n << " lcs=" << list_str(lower_central_dims) << " derived=" << list_str(derived_dims)
       << " leib=" << dim_leib << " center=" << dim_center << " lann=" << dim_left_ann
       << " rann=" << dim_right_ann << " Z^A2=" << dim_center_cap_A2 << " Leib^A3=" << dim_leib_cap_A3
       << " [A2,A]=" << dim_A2A << " [A2,A2]=" << dim_A2A2 << " der=" << dim_der << " lie=" << (is_lie ? "yes" : "no");
    return os.str();
}

std::string InvariantSignature::to_json() const {
    return nlohmann::json{{"n", n},
                          {"lower_central_dims", lower_central_dims},
                          {"derived_dims", derived_dims},
                          {"dim_leib", dim_leib},
                          {"dim_center", dim_center},
                          {"dim_left_ann", dim_left_ann},
                          {"dim_right_ann", dim_right_ann},
                          {"dim_center_cap_A2", dim_center_cap_A2},
                          {"dim_leib_cap_A3", dim_leib_cap_A3},
                          {"dim_A2A", dim_A2A},
                          {"dim_A2A2", dim_A2A2},
                          {"dim_der", dim_der},
                          {"is_lie", is_lie}}
        .dump();
}

}  // namespace leibcheck
