// Command-line front end: moment tables, Verblunsky coefficients by several
// routes, verification suites, positivity-system reports and SVG plots.
#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "opuc/classify.hpp"
#include "opuc/differences.hpp"
#include "opuc/extended.hpp"
#include "opuc/io.hpp"
#include "opuc/relations.hpp"

namespace {

using opuc::json;

struct Cli {
    std::string weight;
    std::string lambda, beta, eta, t, u, r, b, b0;
    int n = 10;
    std::string precision = "double";
    int grid = 256;
    std::string tol;
    std::string out;
    std::string format = "csv";
    bool raw = false;

    std::string method = "moments";  // verblunsky
    std::string suite = "all";       // verify
    std::string roots;               // classify / verify --suite classify
    std::string moments_in;          // verify / verblunsky
    std::string input;               // plot
    std::string residual_out;        // verify: worst per-point residual table
};

opuc::WeightSpec spec_from_cli(const Cli& cfg) {
    using namespace opuc;
    if (cfg.weight.empty()) throw InvalidParameter("--weight is required");
    WeightSpec spec;
    spec.family = family_from_name(cfg.weight);
    spec.normalized = !cfg.raw;

    auto put = [&](const std::string& name, const std::string& literal) {
        if (literal.empty())
            throw InvalidParameter(cfg.weight + " requires --" + name);
        auto [re, im] = split_complex_literal(literal);
        spec.params[name] = {re, im};
    };

    switch (spec.family) {
        case Family::lebesgue:
            break;
        case Family::exp_sine:
            put("u", cfg.u);
            break;
        case Family::bessel:
            put("t", cfg.t);
            break;
        case Family::circular_jacobi:
            put("lambda", cfg.lambda);
            break;
        case Family::jacobi:
            put("lambda", cfg.lambda);
            put("beta", cfg.beta);
            break;
        case Family::generalized_jacobi:
            put("lambda", cfg.lambda);
            put("beta", cfg.beta);
            put("eta", cfg.eta.empty() ? "0" : cfg.eta);
            break;
        case Family::sri_ranga:
            if (!cfg.b.empty()) {
                put("b", cfg.b);
            } else {
                if (cfg.lambda.empty())
                    throw InvalidParameter("sriranga requires --b or --lambda/--eta");
                spec.params["b"] = {cfg.lambda, cfg.eta.empty() ? "0" : cfg.eta};
            }
            break;
        case Family::rotated_cos:
            if (cfg.beta.empty())
                throw InvalidParameter("rotatedcos requires --beta (and optional --eta)");
            spec.params["c"] = {cfg.beta, cfg.eta.empty() ? "0" : cfg.eta};
            break;
        case Family::half_plane_pole: {
            put("r", cfg.r);
            if (!cfg.u.empty()) {
                put("u", cfg.u);
            } else if (!cfg.b0.empty()) {
                // b0 = -conj(u)/conj(r)  =>  u = -conj(b0) r
                auto b0v = parse_complex<double>(cfg.b0);
                auto rv = parse_complex<double>(cfg.r);
                auto uv = -std::conj(b0v) * rv;
                spec.params["u"] = {num_traits<double>::str(uv.real()),
                                    num_traits<double>::str(uv.imag())};
            } else {
                throw InvalidParameter("halfplanepole requires --u or --b0");
            }
            break;
        }
    }
    validate_spec(spec);
    return spec;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream os(path);
    if (!os) throw opuc::InvalidParameter("cannot open output file '" + path + "'");
    os << content;
}

// ---------------------------------------------------------------- moments --

template <class R>
int cmd_moments(const Cli& cfg) {
    using namespace opuc;
    auto spec = spec_from_cli(cfg);
    auto table = compute_moments<R>(spec, cfg.n);

    for (int k = 0; k <= std::min(3, cfg.n); ++k)
        std::cout << "mu_" << k << " = " << complex_str<R>(table.mu(k)) << "\n";
    std::cout << "rule=" << table.meta.rule << " nodes=" << table.meta.nodes
              << " est_error=" << num_traits<R>::str(table.meta.est_error) << "\n";

    if (cfg.format == "csv") {
        std::ostringstream os;
        os << "k,re,im\n";
        for (int k = -cfg.n; k <= cfg.n; ++k)
            os << k << ',' << num_traits<R>::str(table.mu(k).real()) << ','
               << num_traits<R>::str(table.mu(k).imag()) << '\n';
        if (!cfg.out.empty()) write_output(cfg.out, os.str());
    } else {
        if (!cfg.out.empty()) write_output(cfg.out, moment_table_json(table).dump(2) + "\n");
    }
    return 0;
}

// ------------------------------------------------------------- verblunsky --

template <class R>
std::vector<opuc::complex_t<R>> difference_route(const opuc::WeightContext<R>& ctx, int n_max,
                                                 const opuc::OpucSequence<R>& moment_seq) {
    using namespace opuc;
    using C = complex_t<R>;
    switch (ctx.family) {
        case Family::lebesgue:
        case Family::circular_jacobi:
        case Family::sri_ranga:
            return propagate(make_difference_eq(DiffId::sinw_two_term, ctx),
                             std::vector<C>{C(-1)}, n_max)
                .alpha;
        case Family::bessel:
            return propagate(make_difference_eq(DiffId::dpii, ctx),
                             std::vector<C>{moment_seq.alpha(0), moment_seq.alpha(1)}, n_max)
                .alpha;
        case Family::exp_sine:
            return propagate(make_difference_eq(DiffId::complex_dpii, ctx),
                             std::vector<C>{moment_seq.alpha(0), moment_seq.alpha(1)}, n_max)
                .alpha;
        default: {
            // general equation (2.10) driven by the family's degree-2 pair
            auto pairs = pearson_pairs(ctx);
            for (const auto& pair : pairs) {
                if (pair.A.degree() != 2) continue;
                auto eq = make_difference_eq(DiffId::general_primary, ctx, pair);
                return propagate(eq, std::vector<C>{moment_seq.alpha(0), moment_seq.alpha(1)},
                                 n_max)
                    .alpha;
            }
            throw UnsolvableStep("no propagatable pair for this family");
        }
    }
}

template <class R>
int cmd_verblunsky(const Cli& cfg) {
    using namespace opuc;
    using C = complex_t<R>;
    auto spec = spec_from_cli(cfg);
    auto ctx = make_context<R>(spec);
    const int n_max = cfg.n;

    std::vector<std::string> names;
    std::vector<std::vector<C>> routes;

    std::optional<OpucSequence<R>> seq;
    auto need_moments = [&]() -> const OpucSequence<R>& {
        if (!seq) {
            MomentTable<R> T;
            if (!cfg.moments_in.empty()) {
                std::ifstream is(cfg.moments_in);
                if (!is) throw InvalidParameter("cannot read " + cfg.moments_in);
                json j;
                is >> j;
                T = moment_table_from_json<R>(j);
            } else {
                T = compute_moments(ctx, n_max + 2);
            }
            seq = szego_sequence(T, n_max + 1);
        }
        return *seq;
    };

    auto add_route = [&](const std::string& name) {
        if (name == "moments") {
            const auto& s = need_moments();
            std::vector<C> a;
            for (int n = 0; n <= n_max; ++n) a.push_back(s.alpha(n));
            routes.push_back(std::move(a));
            names.push_back(name);
        } else if (name == "closed") {
            routes.push_back(verblunsky_closed_form(ctx, n_max));
            names.push_back(name);
        } else if (name == "difference") {
            routes.push_back(difference_route<R>(ctx, n_max, need_moments()));
            names.push_back(name);
        } else {
            throw InvalidParameter("unknown method '" + name + "'");
        }
    };

    if (cfg.method == "all") {
        add_route("moments");
        try {
            add_route("closed");
        } catch (const NoClosedForm&) {
        }
        add_route("difference");
    } else {
        add_route(cfg.method);
    }

    std::ostringstream os;
    if (cfg.format == "svg") {
        std::vector<std::complex<double>> pts;
        for (const auto& a : routes[0])
            pts.emplace_back(static_cast<double>(a.real()), static_cast<double>(a.imag()));
        svg_alpha_scatter(pts, os);
    } else if (cfg.format == "csv" && routes.size() == 1 && names[0] == "difference") {
        propagation_csv<R>(routes[0], os);  // n, Re, Im, |alpha_n| trace
    } else if (cfg.format == "json") {
        json j;
        j["n_max"] = n_max;
        for (std::size_t m = 0; m < routes.size(); ++m) {
            json arr = json::array();
            for (const auto& a : routes[m])
                arr.push_back({num_traits<R>::str(a.real()), num_traits<R>::str(a.imag())});
            j[names[m]] = arr;
        }
        os << j.dump(2) << "\n";
    } else {
        os << "n";
        for (const auto& nm : names) os << ",re_" << nm << ",im_" << nm;
        for (std::size_t a = 0; a + 1 < routes.size(); ++a)
            for (std::size_t b2 = a + 1; b2 < routes.size(); ++b2)
                os << ",dev_" << names[a] << "_" << names[b2];
        os << "\n";
        for (int n = 0; n <= n_max; ++n) {
            os << n;
            for (const auto& route : routes)
                os << ',' << num_traits<R>::str(route[static_cast<std::size_t>(n)].real()) << ','
                   << num_traits<R>::str(route[static_cast<std::size_t>(n)].imag());
            for (std::size_t a = 0; a + 1 < routes.size(); ++a)
                for (std::size_t b2 = a + 1; b2 < routes.size(); ++b2)
                    os << ','
                       << num_traits<R>::str(static_cast<R>(
                              cabs(routes[a][static_cast<std::size_t>(n)] -
                                   routes[b2][static_cast<std::size_t>(n)])));
            os << "\n";
        }
    }
    write_output(cfg.out, os.str());

    // per-route console summary
    for (std::size_t m = 0; m < names.size(); ++m)
        std::cout << names[m] << " alpha_0 = " << complex_str<R>(routes[m][0]) << "\n";
    if (routes.size() > 1) {
        R worst(0);
        for (std::size_t a = 0; a + 1 < routes.size(); ++a)
            for (std::size_t b2 = a + 1; b2 < routes.size(); ++b2)
                for (int n = 0; n <= n_max; ++n) {
                    R d = cabs(routes[a][static_cast<std::size_t>(n)] -
                               routes[b2][static_cast<std::size_t>(n)]);
                    if (d > worst) worst = d;
                }
        std::cout << "max route deviation = " << num_traits<R>::str(worst) << "\n";
    }
    return 0;
}

// ----------------------------------------------------------------- verify --

template <class R>
class VerifyRun {
public:
    VerifyRun(R tolerance, int grid, int n_max)
        : tol_(tolerance), grid_(grid), n_max_(n_max) {}

    void record(const std::string& check, const R& value, const R& tol, bool pass) {
        all_pass_ &= pass;
        results_.push_back({{"check", check},
                            {"residual", opuc::num_traits<R>::str(value)},
                            {"tolerance", opuc::num_traits<R>::str(tol)},
                            {"pass", pass}});
    }
    void record(const std::string& check, const R& value) {
        record(check, value, tol_, value <= tol_);
    }
    void record_flag(const std::string& check, bool pass) {
        all_pass_ &= pass;
        results_.push_back({{"check", check}, {"pass", pass}});
    }
    void offer_report(const opuc::ResidualReport<R>& rep) {
        if (!worst_ || rep.sup > worst_->sup) worst_ = rep;
    }
    const std::optional<opuc::ResidualReport<R>>& worst_report() const { return worst_; }

    void summary_csv(std::ostream& os) const {
        os << "check,residual,tolerance,pass\n";
        for (const auto& row : results_)
            os << '"' << row.at("check").template get<std::string>() << "\","
               << (row.contains("residual") ? row.at("residual").template get<std::string>()
                                            : "")
               << ','
               << (row.contains("tolerance") ? row.at("tolerance").template get<std::string>()
                                             : "")
               << ',' << (row.at("pass").template get<bool>() ? "1" : "0") << '\n';
    }

    void weight_suites(const Cli& cfg, const opuc::WeightSpec& spec, const std::string& suite);
    void classify_cases();

    json report() const {
        return json{{"pass", all_pass_},
                    {"tolerance", opuc::num_traits<R>::str(tol_)},
                    {"checks", results_}};
    }
    bool passed() const { return all_pass_; }

private:
    R tol_;
    int grid_, n_max_;
    bool all_pass_ = true;
    json results_ = json::array();
    std::optional<opuc::ResidualReport<R>> worst_;
};

template <class R>
void VerifyRun<R>::weight_suites(const Cli& cfg, const opuc::WeightSpec& spec,
                                 const std::string& suite) {
    using namespace opuc;
    const bool all = suite == "all";
    auto ctx = make_context<R>(spec);
    const std::string fam = family_name(spec.family);
    auto pairs = pearson_pairs(ctx);

    MomentTable<R> T;
    if (!cfg.moments_in.empty()) {
        std::ifstream is(cfg.moments_in);
        if (!is) throw InvalidParameter("cannot read " + cfg.moments_in);
        json j;
        is >> j;
        T = moment_table_from_json<R>(j);
    } else {
        T = compute_moments(ctx, n_max_ + 3);
    }
    auto seq = szego_sequence(T, std::min(n_max_ + 1, T.N - 1));

    if (all || suite == "pearson") {
        for (const auto& pair : pairs) {
            auto rep = pearson_residual(ctx, pair, std::min(grid_, 128), tol_);
            offer_report(rep);
            record(fam + " pearson " + pair.label, rep.sup, rep.tolerance, rep.pass);
            record_flag(fam + " boundary " + pair.label, boundary_check(ctx, pair, tol_));
            auto sys_ok = [&]() {
                if (pair.A.degree() == 0) return true;
                if (pair.A.degree() == 1)
                    return membership_check(pair, build_system_deg1<R>(-pair.A.coeff(0)));
                using C = complex_t<R>;
                using std::sqrt;
                C p = pair.A.coeff(1), q = pair.A.coeff(0);
                C disc = sqrt(p * p - C(4) * q);
                return membership_check(
                    pair, build_system_deg2<R>((-p + disc) / C(2), (-p - disc) / C(2)));
            }();
            record_flag(fam + " membership " + pair.label, sys_ok);
        }
        // integration-by-parts identity, first pair, k = 0..n
        const auto& pair = pairs.front();
        using C = complex_t<R>;
        const C I(0, 1);
        R worst(0);
        for (int n = 2; n <= std::min(8, seq.n_max); ++n) {
            ComplexPoly<R> Adphi = pair.A * seq.phi[static_cast<std::size_t>(n)].derivative();
            for (int k = 0; k <= n; ++k) {
                C lhs = inner_product(T, Adphi, ComplexPoly<R>::monomial(k));
                ComplexPoly<R> mult = I * pair.B + C(R(k + 1)) * pair.A;
                C rhs = inner_product(T, seq.phi[static_cast<std::size_t>(n)] * mult,
                                      ComplexPoly<R>::monomial(k + 1));
                R d = cabs(lhs - rhs);
                if (d > worst) worst = d;
            }
        }
        record(fam + " integration-by-parts " + pair.label, worst);
    }

    if (all || suite == "structure") {
        for (const auto& pair : pairs) {
            R worst8_9(0), worst_res(0);
            for (int n = 2; n <= std::min(n_max_, seq.n_max - 1); ++n) {
                auto s8 = structure_coefficients(pair, seq, n, SnnForm::via_gamma);
                auto s9 = structure_coefficients(pair, seq, n, SnnForm::via_conj_gamma);
                R d = cabs(s8.s_nn - s9.s_nn);
                if (d > worst8_9) worst8_9 = d;
                for (auto variant :
                     {SRVariant::star_n, SRVariant::star_np1, SRVariant::star_nm1}) {
                    auto rep = structure_residual(pair, seq, n, grid_, variant, tol_);
                    offer_report(rep);
                    if (rep.sup > worst_res) worst_res = rep.sup;
                }
            }
            record(fam + " structure(3 variants) " + pair.label, worst_res);
            record(fam + " s_nn forms agree " + pair.label, worst8_9);
        }
        for (auto id : applicable_relations(spec.family)) {
            R worst(0);
            for (int n = 2; n <= std::min(n_max_, seq.n_max - 1); ++n) {
                auto rep = specialized_relation(ctx, id, seq, n, grid_, tol_);
                offer_report(rep);
                if (rep.sup > worst) worst = rep.sup;
            }
            record(fam + " relation " + relation_name(id), worst);
        }
    }

    if (all || suite == "difference") {
        for (const auto& pair : pairs) {
            for (auto id : {DiffId::general_primary, DiffId::general_secondary}) {
                auto eq = make_difference_eq(id, ctx, pair);
                R worst(0);
                for (int n = 2; n <= std::min(n_max_, seq.alpha_max()); ++n) {
                    auto res = difference_residual(eq, seq, n);
                    if (res && *res > worst) worst = *res;
                }
                record(fam + " " + diff_name(id) + " " + pair.label, worst);
            }
        }
        for (auto id : applicable_differences(spec.family)) {
            auto eq = make_difference_eq(id, ctx);
            R worst(0);
            int lo = (id == DiffId::sinw_step_down) ? 0
                     : (id == DiffId::sinw_two_term || id == DiffId::sinw_modulus) ? 1
                                                                             : 2;
            int hi = std::min(n_max_, seq.alpha_max() - (id == DiffId::sinw_step_down ? 1 : 0));
            for (int n = lo; n <= hi; ++n) {
                auto res = difference_residual(eq, seq, n);
                if (res && *res > worst) worst = *res;
            }
            record(fam + " " + diff_name(id), worst);
        }
    }
}

template <class R>
void VerifyRun<R>::classify_cases() {
    using namespace opuc;
    using C = complex_t<R>;
    using std::abs;

    {  // Deg1(0): b2 = conj(b0), Im b1 = 1
        auto sys = build_system_deg1<R>(C(0));
        auto sol = solve_system(sys);
        R worst = abs(sol.particular[3] - R(1));
        worst = std::max(worst, abs(sol.particular[0] - sol.particular[4]));
        worst = std::max(worst, abs(sol.particular[1] + sol.particular[5]));
        record_flag("classify deg1(0) rank=3", sol.rank == 3);
        record("classify deg1(0) constraints", worst);
    }
    {  // Deg1(0.45) + boundary row -> B = iz
        auto sys = build_system_deg1<R>(C(R(0.45)));
        ComplexPoly<R> A{C(R(-0.45)), C(1)};
        auto sol = solve_with_rows(sys, {boundary_row(sys, A)});
        R worst(0);
        for (int j = 0; j < 6; ++j)
            worst = std::max(worst, abs(sol.particular[static_cast<std::size_t>(j)] -
                                        (j == 3 ? R(1) : R(0))));
        record("classify deg1(0.45)+boundary = Lebesgue B=iz", worst, R(1e-9), worst <= R(1e-9));
    }
    {  // Deg2(1,-1) contains the generalized Jacobi pair
        auto sys = build_system_deg2<R>(C(1), C(-1));
        WeightSpec gj = make_spec(Family::generalized_jacobi,
                                  {{"lambda", "1"}, {"beta", "0.5"}, {"eta", "0.7"}});
        auto pair = pearson_pairs(make_context<R>(gj))[0];
        record_flag("classify deg2(1,-1) contains generalized-Jacobi pair",
                    membership_check(pair, sys));
        record_flag("classify deg2(1,-1) rank=3", solve_system(sys).rank == 3);
    }
    {  // Deg2 generic-modulus solution structure
        C r1(R(0.5)), r2(R(-0.3));
        auto sys = build_system_deg2<R>(r1, r2);
        auto sol = solve_system(sys);
        record_flag("classify deg2 generic rank=5", sol.rank == 5);
        auto check_point = [&](const std::array<R, 6>& x) {
            C b0v(x[1], x[0]), b1v(x[3], x[2]), b2v(x[5], x[4]);
            R w = abs(b2v.imag() - R(2));
            w = std::max(w, static_cast<R>(cabs(b1v + (r1 + r2) * C(b2v.real(), R(1)))));
            w = std::max(w, static_cast<R>(cabs(b0v - r1 * r2 * C(b2v.real()))));
            return w;
        };
        R worst = check_point(sol.particular);
        for (const auto& v : sol.nullspace) {
            std::array<R, 6> x = sol.particular;
            for (int j = 0; j < 6; ++j)
                x[static_cast<std::size_t>(j)] += R(1.7) * v[static_cast<std::size_t>(j)];
            worst = std::max(worst, check_point(x));
        }
        record("classify deg2 generic solution form", worst, R(1e-9), worst <= R(1e-9));
    }
    {  // Deg2(r, 1/conj r): b2 = (r/conj r) conj(b0) + 2i on the whole space
        C r(R(0.5), R(0.1));
        auto sys = build_system_deg2<R>(r, C(1) / cconj(r));
        auto sol = solve_system(sys);
        auto viol = [&](const std::array<R, 6>& x) {
            C b0v(x[1], x[0]), b2v(x[5], x[4]);
            return static_cast<R>(cabs(b2v - (r / cconj(r)) * cconj(b0v) - C(R(0), R(2))));
        };
        R worst = viol(sol.particular);
        for (const auto& v : sol.nullspace) {
            std::array<R, 6> x = sol.particular;
            for (int j = 0; j < 6; ++j)
                x[static_cast<std::size_t>(j)] += R(0.9) * v[static_cast<std::size_t>(j)];
            worst = std::max(worst, viol(x));
        }
        record("classify deg2(r,1/conj r) branch", worst, R(1e-9), worst <= R(1e-9));
    }
}

template <class R>
int cmd_verify(const Cli& cfg) {
    using namespace opuc;
    R tol = cfg.tol.empty() ? num_traits<R>::default_tolerance() : num_traits<R>::parse(cfg.tol);
    VerifyRun<R> run(tol, cfg.grid, cfg.n);

    if (cfg.suite == "classify" || cfg.suite == "all") run.classify_cases();

    if ((cfg.suite == "classify" || cfg.suite == "all") && !cfg.roots.empty()) {
        using C = complex_t<R>;
        std::vector<C> roots;
        std::stringstream ss(cfg.roots);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) roots.push_back(parse_complex<R>(tok));
        if (roots.empty() || roots.size() > 2)
            throw InvalidParameter("--roots takes one or two complex numbers");
        PositivitySystem<R> sys = (roots.size() == 1)
                                      ? build_system_deg1<R>(roots[0])
                                      : build_system_deg2<R>(roots[0], roots[1]);
        try {
            auto sol = solve_system(sys);
            R res = system_residual(sys, sol.particular);
            run.record("classify --roots " + cfg.roots + " consistency", res);
        } catch (const Infeasible&) {
            run.record_flag("classify --roots " + cfg.roots + " consistency", false);
        }
    }

    if (cfg.suite != "classify") {
        if (!cfg.weight.empty()) {
            run.weight_suites(cfg, spec_from_cli(cfg), cfg.suite);
        } else {
            Cli base = cfg;
            for (const auto& spec : default_catalog()) run.weight_suites(base, spec, cfg.suite);
        }
    } else if (!cfg.weight.empty()) {
        // classify with a selected weight also checks its pairs' membership
        auto ctx = make_context<R>(spec_from_cli(cfg));
        for (const auto& pair : pearson_pairs(ctx)) {
            if (pair.A.degree() == 0) continue;
            bool ok;
            if (pair.A.degree() == 1) {
                ok = membership_check(pair, build_system_deg1<R>(-pair.A.coeff(0)));
            } else {
                using C = complex_t<R>;
                using std::sqrt;
                C p = pair.A.coeff(1), q = pair.A.coeff(0);
                C disc = sqrt(p * p - C(4) * q);
                ok = membership_check(pair,
                                      build_system_deg2<R>((-p + disc) / C(2), (-p - disc) / C(2)));
            }
            run.record_flag(std::string(family_name(ctx.family)) + " membership " + pair.label,
                            ok);
        }
    }

    if (!cfg.residual_out.empty() && run.worst_report()) {
        std::ostringstream rc;
        residual_report_csv(*run.worst_report(), rc);
        write_output(cfg.residual_out, rc.str());
    }

    if (cfg.format == "csv") {
        std::ostringstream sc;
        run.summary_csv(sc);
        write_output(cfg.out, sc.str());
    } else {
        write_output(cfg.out, run.report().dump(2) + "\n");
        if (cfg.out.empty()) std::cout << "\n";
    }
    std::cout << (run.passed() ? "VERIFY PASS" : "VERIFY FAIL") << "\n";
    return run.passed() ? 0 : 1;
}

// --------------------------------------------------------------- classify --

template <class R>
int cmd_classify(const Cli& cfg) {
    using namespace opuc;
    using C = complex_t<R>;
    if (cfg.roots.empty()) throw InvalidParameter("classify requires --roots");

    std::vector<C> roots;
    std::stringstream ss(cfg.roots);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) roots.push_back(parse_complex<R>(tok));
    if (roots.empty() || roots.size() > 2)
        throw InvalidParameter("--roots takes one or two comma-separated complex numbers");

    json j;
    SolutionSpace<R> sol;
    int degree = static_cast<int>(roots.size());
    PositivitySystem<R> sys =
        (degree == 1) ? build_system_deg1<R>(roots[0]) : build_system_deg2<R>(roots[0], roots[1]);
    sol = solve_system(sys);

    j["degree"] = degree;
    json jroots = json::array();
    for (const auto& root : roots) jroots.push_back(complex_str<R>(root));
    j["roots"] = jroots;
    j["rank"] = sol.rank;
    j["nullspace_dimension"] = sol.nullspace.size();
    j["unknown_order"] = (degree == 1) ? "Re b2, Im b2, Re b1, Im b1, Re b0, Im b0"
                                       : "Im b0, Re b0, Im b1, Re b1, Im b2, Re b2";
    json part = json::array();
    for (const R& v : sol.particular) part.push_back(num_traits<R>::str(v));
    j["particular"] = part;
    json null_basis = json::array();
    for (const auto& vec : sol.nullspace) {
        json row = json::array();
        for (const R& v : vec) row.push_back(num_traits<R>::str(v));
        null_basis.push_back(row);
    }
    j["nullspace"] = null_basis;

    // membership of catalog pairs whose A-roots coincide with this system
    json members = json::array();
    for (const auto& spec : default_catalog()) {
        auto ctx = make_context<R>(spec);
        for (const auto& pair : pearson_pairs(ctx)) {
            if (pair.A.degree() != degree) continue;
            bool matches;
            if (degree == 1) {
                matches = cabs(-pair.A.coeff(0) - roots[0]) < R(1e-9);
            } else {
                C s = roots[0] + roots[1], p = roots[0] * roots[1];
                matches = cabs(pair.A.coeff(1) + s) < R(1e-9) &&
                          cabs(pair.A.coeff(0) - p) < R(1e-9);
            }
            if (!matches) continue;
            members.push_back({{"family", family_name(spec.family)},
                               {"pair", pair.label},
                               {"member", membership_check(pair, sys)}});
        }
    }
    j["catalog_membership"] = members;

    write_output(cfg.out, j.dump(2) + "\n");
    return 0;
}

// ------------------------------------------------------------------- plot --

int cmd_plot(const Cli& cfg) {
    using namespace opuc;
    std::ostringstream os;

    if (!cfg.input.empty()) {
        std::ifstream is(cfg.input);
        if (!is) throw InvalidParameter("cannot read " + cfg.input);
        std::string header;
        if (!std::getline(is, header) || header.empty())
            throw InvalidParameter("empty plot input");
        auto split = [](const std::string& line) {
            std::vector<std::string> cells;
            std::stringstream ss(line);
            std::string cell;
            while (std::getline(ss, cell, ',')) cells.push_back(cell);
            return cells;
        };
        if (header.rfind("theta,residual", 0) == 0 || header.rfind("n,residual", 0) == 0) {
            std::vector<double> xs, ys;
            std::string line;
            while (std::getline(is, line)) {
                auto cells = split(line);
                if (cells.size() < 2) continue;
                xs.push_back(num_traits<double>::parse(cells[0]));
                ys.push_back(num_traits<double>::parse(cells[1]));
            }
            if (xs.empty()) throw InvalidParameter("no residual rows in input");
            svg_residual_polyline(xs, ys, header[0] == 'n' ? "n" : "theta", os);
        } else if (header.rfind("n,re_", 0) == 0) {
            std::vector<std::complex<double>> alphas;
            std::string line;
            while (std::getline(is, line)) {
                auto cells = split(line);
                if (cells.size() < 3) continue;
                alphas.emplace_back(num_traits<double>::parse(cells[1]),
                                    num_traits<double>::parse(cells[2]));
            }
            if (alphas.empty()) throw InvalidParameter("no alpha rows in input");
            svg_alpha_scatter(alphas, os);
        } else {
            throw InvalidParameter("unrecognized plot input header: " + header);
        }
    } else if (!cfg.weight.empty()) {
        auto ctx = make_context<double>(spec_from_cli(cfg));
        std::vector<std::complex<double>> alphas;
        try {
            alphas = verblunsky_closed_form(ctx, cfg.n);
        } catch (const NoClosedForm&) {
            auto T = compute_moments(ctx, cfg.n + 2);
            auto seq = szego_sequence(T, cfg.n + 1);
            for (int n = 0; n <= cfg.n; ++n) alphas.push_back(seq.alpha(n));
        }
        svg_alpha_scatter(alphas, os);
    } else {
        throw InvalidParameter("plot requires --input or --weight");
    }

    write_output(cfg.out, os.str());
    return 0;
}

// ------------------------------------------------------------------- main --

template <class R>
int dispatch(const std::string& command, const Cli& cfg) {
    if (command == "moments") return cmd_moments<R>(cfg);
    if (command == "verblunsky") return cmd_verblunsky<R>(cfg);
    if (command == "verify") return cmd_verify<R>(cfg);
    if (command == "classify") return cmd_classify<R>(cfg);
    throw opuc::InvalidParameter("unknown command");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"semi-classical orthogonal polynomials on the unit circle"};
    app.require_subcommand(1);

    Cli cfg;
    auto add_common = [&](CLI::App* sub, bool with_weight = true) {
        if (with_weight)
            sub->add_option("--weight", cfg.weight,
                            "family: lebesgue|expsine|bessel|cjacobi|jacobi|genjacobi|"
                            "sriranga|rotatedcos|halfplanepole");
        sub->add_option("--lambda", cfg.lambda);
        sub->add_option("--beta", cfg.beta);
        sub->add_option("--eta", cfg.eta);
        sub->add_option("--t", cfg.t);
        sub->add_option("--u", cfg.u, "complex, a+bi syntax");
        sub->add_option("--r", cfg.r, "complex, a+bi syntax");
        sub->add_option("--b", cfg.b, "complex, a+bi syntax");
        sub->add_option("--b0", cfg.b0, "complex, a+bi syntax");
        sub->add_option("--n", cfg.n, "max index n");
        sub->add_option("--precision", cfg.precision, "double | extended:<digits>");
        sub->add_option("--grid", cfg.grid, "residual grid size");
        sub->add_option("--tol", cfg.tol, "tolerance override");
        sub->add_option("--out", cfg.out, "output file");
        sub->add_option("--format", cfg.format, "csv|json|svg");
        sub->add_flag("--raw", cfg.raw, "skip normalization");
    };

    auto* mom = app.add_subcommand("moments", "compute a trigonometric moment table");
    add_common(mom);

    auto* ver = app.add_subcommand("verblunsky", "Verblunsky coefficients by several routes");
    add_common(ver);
    ver->add_option("--method", cfg.method, "moments|closed|difference|all");
    ver->add_option("--moments-in", cfg.moments_in, "reuse an exported moment table");

    auto* vfy = app.add_subcommand("verify", "run verification suites");
    add_common(vfy);
    vfy->add_option("--suite", cfg.suite, "pearson|structure|difference|classify|all");
    vfy->add_option("--moments-in", cfg.moments_in, "reuse an exported moment table");
    vfy->add_option("--roots", cfg.roots, "extra root system to solve (classify suite)");
    vfy->add_option("--residual-out", cfg.residual_out,
                    "write the worst per-point residual table as CSV");

    auto* cls = app.add_subcommand("classify", "solve a positivity system for given roots");
    add_common(cls, false);
    cls->add_option("--roots", cfg.roots, "one or two complex roots, comma separated");

    auto* plt = app.add_subcommand("plot", "SVG scatter or residual polyline");
    add_common(plt);
    plt->add_option("--input", cfg.input, "CSV produced by verblunsky or verify");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();

    try {
        if (command == "plot") return cmd_plot(cfg);

        if (cfg.precision == "double") return dispatch<double>(command, cfg);
        if (cfg.precision.rfind("extended", 0) == 0) {
            int digits = 50;
            auto colon = cfg.precision.find(':');
            if (colon != std::string::npos)
                digits = std::atoi(cfg.precision.c_str() + colon + 1);
            if (digits < 30 || digits > 50)
                throw opuc::InvalidParameter(
                    "extended precision supports 30..50 digits (backend carries 50)");
            return dispatch<opuc::ext_real>(command, cfg);
        }
        throw opuc::InvalidParameter("unknown precision '" + cfg.precision + "'");
    } catch (const opuc::NumericalBreakdown& e) {
        std::cerr << "numerical breakdown: " << e.what() << "\n";
        return 3;
    } catch (const opuc::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
