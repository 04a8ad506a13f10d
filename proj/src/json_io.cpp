#include "sp2/json_io.hpp"

#include <cstdio>

#include <json.hpp>

namespace sp2::io {

namespace {

using nlohmann::json;

json parse_or_throw(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("invalid JSON input");
    return j;
}

double number_field(const json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw std::invalid_argument(std::string("missing numeric field \"") + key +
                                    "\"");
    return j.at(key).get<double>();
}

} // namespace

std::string format_number(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Mat2 parse_matrix(const std::string& text, const Tolerances& tol) {
    const json j = parse_or_throw(text);
    return Mat2::make(number_field(j, "a"), number_field(j, "b"),
                      number_field(j, "c"), number_field(j, "d"), tol);
}

std::string matrix_json(const Mat2& m) {
    return "{\"a\": " + format_number(m.a) + ", \"b\": " + format_number(m.b) +
           ", \"c\": " + format_number(m.c) + ", \"d\": " + format_number(m.d) + "}";
}

std::string decomposition_json(const Decomposition& d) {
    return "{\"delta\": " + format_number(d.delta) +
           ", \"eta\": " + format_number(d.eta) + ", \"class\": \"" +
           to_string(d.wigner.kind) + "\", \"param\": " + format_number(d.wigner.param) +
           ", \"negated\": " + (d.negated ? "true" : "false") + "}";
}

cavity::NormalizedCavity parse_cavity(const std::string& text) {
    const json j = parse_or_throw(text);
    if (j.contains("a") || j.contains("b"))
        return cavity::NormalizedCavity::make(number_field(j, "a"),
                                              number_field(j, "b"));
    const auto spec = cavity::CavitySpec::make(
        number_field(j, "R"), number_field(j, "s"), number_field(j, "d"));
    return cavity::NormalizedCavity::from_spec(spec);
}

multilayer::LayerCycle parse_layer_cycle(const std::string& text) {
    const json j = parse_or_throw(text);
    const auto boundary =
        multilayer::BoundaryCoeffs::make(number_field(j, "r"), number_field(j, "t"));
    return multilayer::LayerCycle::make(boundary, number_field(j, "alpha1"),
                                        number_field(j, "alpha2"));
}

std::string comparison_report_json(const oracle::ComparisonReport& rep) {
    return "{\"max_abs_err\": " + format_number(rep.max_abs_err) +
           ", \"max_rel_err\": " + format_number(rep.max_rel_err) +
           ", \"n_trials\": " + std::to_string(rep.n_trials) + ", \"worst_case\": \"" +
           rep.worst_case + "\", \"passed\": " + (rep.passed ? "true" : "false") + "}";
}

} // namespace sp2::io
