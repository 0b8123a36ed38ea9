#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "opuc/differences.hpp"
#include "opuc/io.hpp"
#include "opuc/relations.hpp"
#include "opuc/weights.hpp"

namespace opuc {

namespace {

struct FamilyName {
    Family family;
    const char* name;
};

constexpr FamilyName kFamilies[] = {
    {Family::lebesgue, "lebesgue"},
    {Family::exp_sine, "expsine"},
    {Family::bessel, "bessel"},
    {Family::circular_jacobi, "cjacobi"},
    {Family::jacobi, "jacobi"},
    {Family::generalized_jacobi, "genjacobi"},
    {Family::sri_ranga, "sriranga"},
    {Family::rotated_cos, "rotatedcos"},
    {Family::half_plane_pole, "halfplanepole"},
};

double param_re(const WeightSpec& spec, const std::string& name) {
    auto it = spec.params.find(name);
    if (it == spec.params.end())
        throw InvalidParameter(std::string(family_name(spec.family)) + " requires --" + name);
    return num_traits<double>::parse(it->second.first);
}

double param_im(const WeightSpec& spec, const std::string& name) {
    auto it = spec.params.find(name);
    if (it == spec.params.end())
        throw InvalidParameter(std::string(family_name(spec.family)) + " requires --" + name);
    return num_traits<double>::parse(it->second.second);
}

void require_gt(double value, double bound, const std::string& what) {
    if (!(value > bound))
        throw InvalidParameter(what + " must be > " + num_traits<double>::str(bound) +
                               " (got " + num_traits<double>::str(value) + ")");
}

}  // namespace

const char* family_name(Family f) {
    for (const auto& e : kFamilies)
        if (e.family == f) return e.name;
    return "?";
}

Family family_from_name(const std::string& name) {
    for (const auto& e : kFamilies)
        if (name == e.name) return e.family;
    throw InvalidParameter("unknown weight family '" + name + "'");
}

WeightSpec make_spec(Family f,
                     std::initializer_list<std::pair<std::string, std::string>> real_params,
                     bool normalized) {
    WeightSpec spec;
    spec.family = f;
    spec.normalized = normalized;
    for (const auto& [k, v] : real_params) spec.params[k] = {v, "0"};
    return spec;
}

void set_param(WeightSpec& spec, const std::string& name, const std::string& re,
               const std::string& im) {
    spec.params[name] = {re, im};
}

void validate_spec(const WeightSpec& spec) {
    switch (spec.family) {
        case Family::lebesgue:
            break;
        case Family::exp_sine:
            param_re(spec, "u");
            break;
        case Family::bessel:
            require_gt(param_re(spec, "t"), 0.0, "t");
            if (param_im(spec, "t") != 0.0) throw InvalidParameter("t must be real");
            break;
        case Family::circular_jacobi:
            require_gt(param_re(spec, "lambda"), -0.5, "lambda");
            break;
        case Family::jacobi:
            require_gt(param_re(spec, "lambda"), -0.5, "lambda");
            require_gt(param_re(spec, "beta"), -0.5, "beta");
            break;
        case Family::generalized_jacobi:
            require_gt(param_re(spec, "lambda"), -0.5, "lambda");
            require_gt(param_re(spec, "beta"), -0.5, "beta");
            param_re(spec, "eta");
            break;
        case Family::sri_ranga:
            require_gt(param_re(spec, "b"), -0.5, "Re(b) = lambda");
            break;
        case Family::rotated_cos:
            require_gt(param_re(spec, "c"), -0.5, "Re(c) = beta");
            break;
        case Family::half_plane_pole: {
            param_re(spec, "u");
            double rr = param_re(spec, "r"), ri = param_im(spec, "r");
            double mod = std::hypot(rr, ri);
            if (mod < 1e-9 || std::abs(mod - 1.0) < 1e-9)
                throw InvalidParameter("|r| must avoid 0 and 1 (got |r| = " +
                                       num_traits<double>::str(mod) + ")");
            break;
        }
    }
}

std::vector<WeightSpec> default_catalog() {
    std::vector<WeightSpec> out;
    out.push_back(make_spec(Family::lebesgue));
    {
        WeightSpec s = make_spec(Family::exp_sine);
        set_param(s, "u", "0.3", "0.4");
        out.push_back(s);
    }
    out.push_back(make_spec(Family::bessel, {{"t", "1"}}));
    out.push_back(make_spec(Family::circular_jacobi, {{"lambda", "1"}}));
    out.push_back(make_spec(Family::jacobi, {{"lambda", "1"}, {"beta", "0.5"}}));
    out.push_back(
        make_spec(Family::generalized_jacobi, {{"lambda", "1"}, {"beta", "0.5"}, {"eta", "0.3"}}));
    {
        WeightSpec s = make_spec(Family::sri_ranga);
        set_param(s, "b", "1", "0.5");
        out.push_back(s);
    }
    {
        WeightSpec s = make_spec(Family::rotated_cos);
        set_param(s, "c", "0.5", "0.3");
        out.push_back(s);
    }
    {
        WeightSpec s = make_spec(Family::half_plane_pole);
        set_param(s, "u", "0.3", "0.2");
        set_param(s, "r", "0.5", "0.1");
        out.push_back(s);
    }
    return out;
}

namespace {

struct RelationName {
    RelationId id;
    const char* name;
};

constexpr RelationName kRelations[] = {
    {RelationId::sinw_zm1, "sinw_zm1"},
    {RelationId::sinw_z2m1, "sinw_z2m1"},
    {RelationId::sinw_zm1_sq, "sinw_zm1_sq"},
    {RelationId::sinw_z_zm1, "sinw_z_zm1"},
    {RelationId::sinw_zm1_zmr, "sinw_zm1_zmr"},
    {RelationId::cjacobi_zm1, "cjacobi_zm1"},
    {RelationId::cjacobi_z_zm1, "cjacobi_z_zm1"},
    {RelationId::cjacobi_zm1_sq, "cjacobi_zm1_sq"},
    {RelationId::cjacobi_z2m1, "cjacobi_z2m1"},
    {RelationId::expsine, "expsine"},
    {RelationId::bessel_deriv, "bessel_deriv"},
    {RelationId::bessel_zderiv, "bessel_zderiv"},
    {RelationId::halfplane, "halfplane"},
    {RelationId::genjacobi, "genjacobi"},
    {RelationId::jacobi, "jacobi"},
};

struct DiffName {
    DiffId id;
    const char* name;
};

constexpr DiffName kDiffs[] = {
    {DiffId::general_primary, "general_primary"},
    {DiffId::general_secondary, "general_secondary"},
    {DiffId::sinw_step_down, "sinw_step_down"},
    {DiffId::sinw_two_term, "sinw_two_term"},
    {DiffId::sinw_split_re, "sinw_split_re"},
    {DiffId::sinw_split_im, "sinw_split_im"},
    {DiffId::sinw_closed_sum, "sinw_closed_sum"},
    {DiffId::sinw_closed_diff, "sinw_closed_diff"},
    {DiffId::sinw_modulus, "sinw_modulus"},
    {DiffId::dpii, "dpii"},
    {DiffId::complex_dpii, "complex_dpii"},
    {DiffId::halfplane_pair, "halfplane_pair"},
    {DiffId::genjacobi_pair, "genjacobi_pair"},
    {DiffId::jacobi_pair, "jacobi_pair"},
};

}  // namespace

const char* relation_name(RelationId id) {
    for (const auto& e : kRelations)
        if (e.id == id) return e.name;
    return "?";
}

RelationId relation_from_name(const std::string& name) {
    for (const auto& e : kRelations)
        if (name == e.name) return e.id;
    throw UnknownRelation("'" + name + "'");
}

std::vector<RelationId> applicable_relations(Family f) {
    switch (f) {
        case Family::exp_sine:
            return {RelationId::expsine};
        case Family::bessel:
            return {RelationId::bessel_deriv, RelationId::bessel_zderiv};
        case Family::circular_jacobi:
            return {RelationId::sinw_zm1,      RelationId::sinw_z2m1,       RelationId::sinw_zm1_sq,
                    RelationId::sinw_z_zm1,      RelationId::sinw_zm1_zmr, RelationId::cjacobi_zm1,
                    RelationId::cjacobi_z_zm1, RelationId::cjacobi_zm1_sq, RelationId::cjacobi_z2m1};
        case Family::jacobi:
            return {RelationId::jacobi, RelationId::genjacobi};
        case Family::generalized_jacobi:
            return {RelationId::genjacobi};
        case Family::sri_ranga:
            return {RelationId::sinw_zm1, RelationId::sinw_z2m1, RelationId::sinw_zm1_sq, RelationId::sinw_z_zm1,
                    RelationId::sinw_zm1_zmr};
        case Family::half_plane_pole:
            return {RelationId::halfplane};
        default:
            return {};
    }
}

const char* diff_name(DiffId id) {
    for (const auto& e : kDiffs)
        if (e.id == id) return e.name;
    return "?";
}

DiffId diff_from_name(const std::string& name) {
    for (const auto& e : kDiffs)
        if (name == e.name) return e.id;
    throw InvalidParameter("unknown difference equation '" + name + "'");
}

std::vector<DiffId> applicable_differences(Family f) {
    switch (f) {
        case Family::exp_sine:
            return {DiffId::complex_dpii};
        case Family::bessel:
            return {DiffId::dpii};
        case Family::circular_jacobi:
        case Family::sri_ranga:
            return {DiffId::sinw_step_down, DiffId::sinw_two_term,  DiffId::sinw_split_re,
                    DiffId::sinw_split_im, DiffId::sinw_closed_sum, DiffId::sinw_closed_diff,
                    DiffId::sinw_modulus};
        case Family::jacobi:
            return {DiffId::jacobi_pair, DiffId::genjacobi_pair};
        case Family::generalized_jacobi:
            return {DiffId::genjacobi_pair};
        case Family::half_plane_pole:
            return {DiffId::halfplane_pair};
        default:
            return {};
    }
}

json weight_spec_json(const WeightSpec& spec, int pair_index) {
    json params = json::object();
    for (const auto& [k, v] : spec.params) params[k] = {{"re", v.first}, {"im", v.second}};
    return json{{"family", family_name(spec.family)},
                {"params", params},
                {"normalized", spec.normalized},
                {"pair_index", pair_index}};
}

WeightSpec weight_spec_from_json(const json& j) {
    WeightSpec spec;
    spec.family = family_from_name(j.at("family").get<std::string>());
    spec.normalized = j.value("normalized", true);
    for (auto it = j.at("params").begin(); it != j.at("params").end(); ++it)
        spec.params[it.key()] = {it.value().at("re").get<std::string>(),
                                 it.value().at("im").get<std::string>()};
    validate_spec(spec);
    return spec;
}

}  // namespace opuc
