#include <algorithm>
#include <cmath>

#include "opuc/io.hpp"

namespace opuc {

namespace {

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

}  // namespace

// Scatter of alpha_n inside the unit disk, unit circle drawn.
void svg_alpha_scatter(const std::vector<std::complex<double>>& alphas, std::ostream& os) {
    const double size = 440.0, cx = size / 2, cy = size / 2, rad = 190.0;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
       << "\" viewBox=\"0 0 " << size << " " << size << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<circle cx=\"" << cx << "\" cy=\"" << cy << "\" r=\"" << rad
       << "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
    os << "<line x1=\"" << cx - rad << "\" y1=\"" << cy << "\" x2=\"" << cx + rad << "\" y2=\""
       << cy << "\" stroke=\"#cccccc\"/>\n";
    os << "<line x1=\"" << cx << "\" y1=\"" << cy - rad << "\" x2=\"" << cx << "\" y2=\""
       << cy + rad << "\" stroke=\"#cccccc\"/>\n";
    for (std::size_t n = 0; n < alphas.size(); ++n) {
        double x = cx + rad * alphas[n].real();
        double y = cy - rad * alphas[n].imag();
        os << "<circle cx=\"" << num(x) << "\" cy=\"" << num(y)
           << "\" r=\"3\" fill=\"#1f6fb2\"><title>n=" << n << "</title></circle>\n";
    }
    os << "</svg>\n";
}

// Polyline of residuals against theta (or n); log10 ordinate when positive.
void svg_residual_polyline(const std::vector<double>& x, const std::vector<double>& y,
                           const std::string& x_label, std::ostream& os) {
    const double w = 560.0, h = 340.0, ml = 60.0, mr = 16.0, mt = 16.0, mb = 40.0;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << " " << h << "\">\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    if (!x.empty()) {
        double xmin = *std::min_element(x.begin(), x.end());
        double xmax = *std::max_element(x.begin(), x.end());
        if (xmax == xmin) xmax = xmin + 1.0;
        std::vector<double> ly(y.size());
        for (std::size_t k = 0; k < y.size(); ++k)
            ly[k] = std::log10(std::max(y[k], 1e-300));
        double ymin = *std::min_element(ly.begin(), ly.end());
        double ymax = *std::max_element(ly.begin(), ly.end());
        if (ymax - ymin < 1.0) {
            ymax += 0.5;
            ymin -= 0.5;
        }
        os << "<polyline fill=\"none\" stroke=\"#b23a1f\" stroke-width=\"1.2\" points=\"";
        for (std::size_t k = 0; k < x.size(); ++k) {
            double px = ml + (w - ml - mr) * (x[k] - xmin) / (xmax - xmin);
            double py = h - mb - (h - mt - mb) * (ly[k] - ymin) / (ymax - ymin);
            os << num(px) << ',' << num(py) << ' ';
        }
        os << "\"/>\n";
        os << "<text x=\"" << (w / 2) << "\" y=\"" << (h - 10)
           << "\" font-size=\"12\" text-anchor=\"middle\">" << x_label << "</text>\n";
        os << "<text x=\"14\" y=\"" << (h / 2)
           << "\" font-size=\"12\" text-anchor=\"middle\" transform=\"rotate(-90 14 " << (h / 2)
           << ")\">log10 residual</text>\n";
    }
    os << "</svg>\n";
}

}  // namespace opuc
