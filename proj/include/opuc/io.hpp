// Serialization: JSON for moment tables / sequences / reports / catalog
// entries (numbers as decimal strings, full precision), CSV tables, and the
// two SVG plot forms.
#ifndef OPUC_IO_HPP
#define OPUC_IO_HPP

#include <json.hpp>
#include <ostream>

#include "opuc/mopuc.hpp"
#include "opuc/report.hpp"
#include "opuc/weights.hpp"

namespace opuc {

using json = nlohmann::json;

template <class R>
json moment_table_json(const MomentTable<R>& t) {
    json moments = json::array();
    for (int k = -t.N; k <= t.N; ++k) {
        const auto& v = t.mu(k);
        moments.push_back({{"k", k},
                           {"re", num_traits<R>::str(v.real())},
                           {"im", num_traits<R>::str(v.imag())}});
    }
    return json{{"N", t.N},
                {"precision", t.precision},
                {"quadrature",
                 {{"rule", t.meta.rule},
                  {"levels", t.meta.levels},
                  {"nodes", t.meta.nodes},
                  {"est_error", num_traits<R>::str(t.meta.est_error)}}},
                {"moments", moments}};
}

template <class R>
MomentTable<R> moment_table_from_json(const json& j) {
    MomentTable<R> t;
    t.N = j.at("N").get<int>();
    t.precision = j.at("precision").get<std::string>();
    t.meta.rule = j.at("quadrature").at("rule").get<std::string>();
    t.meta.levels = j.at("quadrature").at("levels").get<int>();
    t.meta.nodes = j.at("quadrature").at("nodes").get<long>();
    t.meta.est_error = num_traits<R>::parse(j.at("quadrature").at("est_error").get<std::string>());
    t.meta.converged = true;
    t.data.assign(2 * static_cast<std::size_t>(t.N) + 1, complex_t<R>(0));
    for (const auto& m : j.at("moments")) {
        int k = m.at("k").get<int>();
        if (k < -t.N || k > t.N) throw InvalidParameter("moment index outside table");
        t.data[static_cast<std::size_t>(k + t.N)] =
            complex_t<R>(num_traits<R>::parse(m.at("re").get<std::string>()),
                         num_traits<R>::parse(m.at("im").get<std::string>()));
    }
    return t;
}

template <class R>
void opuc_sequence_csv(const OpucSequence<R>& seq, std::ostream& os) {
    os << "n,re_alpha,im_alpha,re_gamma,im_gamma,re_beta,im_beta,norm_sq\n";
    for (int n = 0; n <= seq.n_max; ++n) {
        auto a = (n <= seq.alpha_max()) ? seq.alpha(n) : complex_t<R>(0);
        os << n << ',' << num_traits<R>::str(a.real()) << ',' << num_traits<R>::str(a.imag())
           << ',' << num_traits<R>::str(seq.gamma_n[static_cast<std::size_t>(n)].real()) << ','
           << num_traits<R>::str(seq.gamma_n[static_cast<std::size_t>(n)].imag()) << ','
           << num_traits<R>::str(seq.beta_n[static_cast<std::size_t>(n)].real()) << ','
           << num_traits<R>::str(seq.beta_n[static_cast<std::size_t>(n)].imag()) << ',';
        if (n < static_cast<int>(seq.norm_sq.size()))
            os << num_traits<R>::str(seq.norm_sq[static_cast<std::size_t>(n)]);
        os << '\n';
    }
}

template <class R>
json opuc_sequence_json(const OpucSequence<R>& seq) {
    json records = json::array();
    for (int n = 0; n <= seq.n_max; ++n) {
        json coeffs = json::array();
        for (const auto& cc : seq.phi[static_cast<std::size_t>(n)].coeffs())
            coeffs.push_back({num_traits<R>::str(cc.real()), num_traits<R>::str(cc.imag())});
        json rec{{"n", n},
                 {"phi", coeffs},
                 {"gamma", {num_traits<R>::str(seq.gamma_n[static_cast<std::size_t>(n)].real()),
                            num_traits<R>::str(seq.gamma_n[static_cast<std::size_t>(n)].imag())}},
                 {"beta", {num_traits<R>::str(seq.beta_n[static_cast<std::size_t>(n)].real()),
                           num_traits<R>::str(seq.beta_n[static_cast<std::size_t>(n)].imag())}}};
        if (n <= seq.alpha_max())
            rec["alpha"] = {num_traits<R>::str(seq.alpha(n).real()),
                            num_traits<R>::str(seq.alpha(n).imag())};
        if (n < static_cast<int>(seq.norm_sq.size()))
            rec["norm_sq"] = num_traits<R>::str(seq.norm_sq[static_cast<std::size_t>(n)]);
        records.push_back(std::move(rec));
    }
    return json{{"n_max", seq.n_max}, {"records", records}};
}

template <class R>
json residual_report_json(const ResidualReport<R>& rep) {
    return json{{"label", rep.label},
                {"sup", num_traits<R>::str(rep.sup)},
                {"scale", num_traits<R>::str(rep.scale)},
                {"tolerance", num_traits<R>::str(rep.tolerance)},
                {"pass", rep.pass},
                {"points", rep.grid.size()}};
}

template <class R>
void residual_report_csv(const ResidualReport<R>& rep, std::ostream& os) {
    os << "theta,residual\n";
    for (std::size_t k = 0; k < rep.grid.size(); ++k)
        os << num_traits<R>::str(rep.grid[k]) << ',' << num_traits<R>::str(rep.residuals[k])
           << '\n';
}

// per-index residual table (difference equations, fato1, ...)
template <class R>
void residual_table_csv(const std::vector<std::pair<int, R>>& rows, std::ostream& os) {
    os << "n,residual\n";
    for (const auto& [n, r] : rows) os << n << ',' << num_traits<R>::str(r) << '\n';
}

template <class R>
void propagation_csv(const std::vector<complex_t<R>>& alphas, std::ostream& os) {
    os << "n,re_alpha,im_alpha,abs_alpha\n";
    for (std::size_t n = 0; n < alphas.size(); ++n)
        os << n << ',' << num_traits<R>::str(alphas[n].real()) << ','
           << num_traits<R>::str(alphas[n].imag()) << ','
           << num_traits<R>::str(static_cast<R>(cabs(alphas[n]))) << '\n';
}

json weight_spec_json(const WeightSpec& spec, int pair_index = 0);
WeightSpec weight_spec_from_json(const json& j);

// SVG plots (double coordinates)
void svg_alpha_scatter(const std::vector<std::complex<double>>& alphas, std::ostream& os);
void svg_residual_polyline(const std::vector<double>& x, const std::vector<double>& y,
                           const std::string& x_label, std::ostream& os);

}  // namespace opuc

#endif
