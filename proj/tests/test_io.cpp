#include <doctest.h>

#include <sstream>

#include "opuc/io.hpp"

using namespace opuc;
using C = std::complex<double>;

TEST_CASE("complex literal parsing") {
    auto p = [](const std::string& s) { return parse_complex<double>(s); };
    CHECK(p("1") == C(1, 0));
    CHECK(p("-2.5") == C(-2.5, 0));
    CHECK(p("1+0.5i") == C(1, 0.5));
    CHECK(p("0.3-0.7i") == C(0.3, -0.7));
    CHECK(p("i") == C(0, 1));
    CHECK(p("-i") == C(0, -1));
    CHECK(p("0.5i") == C(0, 0.5));
    CHECK(p("1e-3+2e4i") == C(1e-3, 2e4));
    CHECK(p("2-i") == C(2, -1));
    CHECK_THROWS_AS(p("abc"), InvalidParameter);
    CHECK_THROWS_AS(p(""), InvalidParameter);

    // round trip through the printer
    for (C z : {C(0.1, -0.25), C(-3, 0), C(0, 2)}) {
        CHECK(p(complex_str<double>(z)) == z);
    }
}

TEST_CASE("weight spec JSON round trip") {
    WeightSpec s = make_spec(Family::sri_ranga);
    set_param(s, "b", "1", "0.5");
    s.normalized = false;
    auto j = weight_spec_json(s, 2);
    CHECK(j["family"] == "sriranga");
    CHECK(j["pair_index"] == 2);
    auto s2 = weight_spec_from_json(j);
    CHECK(s2.family == Family::sri_ranga);
    CHECK(s2.normalized == false);
    CHECK(s2.params.at("b") == std::make_pair(std::string("1"), std::string("0.5")));
}

TEST_CASE("opuc sequence CSV and JSON") {
    auto ctx = make_context<double>(make_spec(Family::circular_jacobi, {{"lambda", "1"}}));
    auto T = compute_moments(ctx, 6);
    auto seq = szego_sequence(T, 5);

    std::ostringstream csv;
    opuc_sequence_csv(seq, csv);
    std::string text = csv.str();
    CHECK(text.find("n,re_alpha,im_alpha") == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 7);  // header + 6 rows

    auto j = opuc_sequence_json(seq);
    CHECK(j["n_max"] == 5);
    CHECK(j["records"].size() == 6);
    // alpha_0 = -1/2 for lambda = 1
    double a0 = num_traits<double>::parse(j["records"][0]["alpha"][0].get<std::string>());
    CHECK(a0 == doctest::Approx(-0.5).epsilon(1e-10));
    // phi_2 has 3 coefficients
    CHECK(j["records"][2]["phi"].size() == 3);
}

TEST_CASE("residual report JSON and CSV") {
    auto rep = ResidualReport<double>::from("demo", {0.1, 0.2, 0.3}, {1e-12, 5e-11, 2e-13},
                                            1e-8, 3.0);
    auto j = residual_report_json(rep);
    CHECK(j["pass"] == true);
    CHECK(j["label"] == "demo");
    CHECK(num_traits<double>::parse(j["sup"].get<std::string>()) == 5e-11);

    std::ostringstream csv;
    residual_report_csv(rep, csv);
    std::string text = csv.str();
    CHECK(text.find("theta,residual") == 0);
    CHECK(std::count(text.begin(), text.end(), '\n') == 4);
}

TEST_CASE("difference-table and propagation CSV") {
    std::ostringstream t1;
    residual_table_csv<double>({{2, 1e-12}, {3, 4e-11}}, t1);
    std::string table = t1.str();
    CHECK(table.find("n,residual\n2,") == 0);
    // 17 significant digits round-trip exactly
    auto comma = table.rfind(',');
    CHECK(num_traits<double>::parse(table.substr(comma + 1, table.size() - comma - 2)) == 4e-11);

    std::ostringstream t2;
    propagation_csv<double>({C(-0.5, 0), C(0, 0.25)}, t2);
    std::string text = t2.str();
    CHECK(text.find("n,re_alpha,im_alpha,abs_alpha") == 0);
    CHECK(text.find("1,0,0.25,0.25") != std::string::npos);
}

TEST_CASE("SVG writers emit well-formed documents") {
    std::ostringstream scatter;
    svg_alpha_scatter({C(-0.5, 0), C(-0.33, 0.1), C(0, 0)}, scatter);
    std::string s = scatter.str();
    CHECK(s.find("<svg") == 0);
    CHECK(s.find("</svg>") != std::string::npos);
    CHECK(std::count(s.begin(), s.end(), '\n') > 4);
    // three data points plus the unit circle
    CHECK(s.find("n=2") != std::string::npos);

    std::ostringstream line;
    svg_residual_polyline({0, 1, 2, 3}, {1e-9, 1e-10, 1e-12, 1e-8}, "n", line);
    CHECK(line.str().find("polyline") != std::string::npos);
    CHECK(line.str().find("</svg>") != std::string::npos);
}
