#include "ordinary/svg.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>
#include <vector>

namespace ordinary {

namespace {

constexpr int kSize = 800;  // pixel viewport, square
constexpr int kGrid = 256;  // contour cells per axis

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

// Coefficients scaled into doubles by the largest magnitude, so huge exact
// integers keep their sign pattern instead of overflowing.
std::vector<double> scaled_coeffs(const std::vector<Int>& coeffs) {
    Int maxc = 0;
    for (const auto& c : coeffs) maxc = std::max(maxc, abs_int(c));
    std::vector<double> out;
    out.reserve(coeffs.size());
    for (const auto& c : coeffs) {
        Rat q = make_rat(c, maxc);
        out.push_back(q.get_d());
    }
    return out;
}

double eval_affine(const std::vector<double>& c, const std::vector<std::array<int, 3>>& mono,
                   double x, double y) {
    double acc = 0;
    for (size_t i = 0; i < mono.size(); ++i)
        acc += c[i] * std::pow(x, mono[i][0]) * std::pow(y, mono[i][1]);
    return acc;
}

} // namespace

std::string emit_plot(const PointSet& A, const std::optional<Certificate>& cert,
                      const PlotWindow& w) {
    const double spanx = w.x1 - w.x0, spany = w.y1 - w.y0;
    auto px = [&](double x) { return (x - w.x0) / spanx * kSize; };
    auto py = [&](double y) { return kSize - (y - w.y0) / spany * kSize; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize
       << "\" viewBox=\"0 0 " << kSize << " " << kSize << "\">\n";
    os << "<rect width=\"" << kSize << "\" height=\"" << kSize << "\" fill=\"white\"/>\n";

    if (cert) {
        const auto& mono = monomial_basis(cert->degree);
        auto c = scaled_coeffs(cert->coeffs);
        // Node samples of the dehomogenized polynomial, then one segment per
        // sign-changing cell edge pair (marching squares, midpoint-free).
        std::vector<double> val(static_cast<size_t>((kGrid + 1) * (kGrid + 1)));
        for (int i = 0; i <= kGrid; ++i)
            for (int j = 0; j <= kGrid; ++j) {
                double x = w.x0 + spanx * i / kGrid;
                double y = w.y0 + spany * j / kGrid;
                val[static_cast<size_t>(i * (kGrid + 1) + j)] = eval_affine(c, mono, x, y);
            }
        os << "<path fill=\"none\" stroke=\"#1f77b4\" stroke-width=\"1.5\" d=\"";
        auto node = [&](int i, int j) { return val[static_cast<size_t>(i * (kGrid + 1) + j)]; };
        for (int i = 0; i < kGrid; ++i)
            for (int j = 0; j < kGrid; ++j) {
                double x0 = w.x0 + spanx * i / kGrid, x1 = w.x0 + spanx * (i + 1) / kGrid;
                double y0 = w.y0 + spany * j / kGrid, y1 = w.y0 + spany * (j + 1) / kGrid;
                double v00 = node(i, j), v10 = node(i + 1, j), v01 = node(i, j + 1),
                       v11 = node(i + 1, j + 1);
                if (!std::isfinite(v00) || !std::isfinite(v10) || !std::isfinite(v01) ||
                    !std::isfinite(v11))
                    continue;
                struct Pt { double x, y; };
                std::vector<Pt> cuts;
                auto edge = [&](double va, double vb, double ax, double ay, double bx, double by) {
                    if ((va < 0) == (vb < 0)) return;
                    if (va == vb) return;
                    double t = va / (va - vb);
                    cuts.push_back(Pt{ax + t * (bx - ax), ay + t * (by - ay)});
                };
                edge(v00, v10, x0, y0, x1, y0);
                edge(v10, v11, x1, y0, x1, y1);
                edge(v01, v11, x0, y1, x1, y1);
                edge(v00, v01, x0, y0, x0, y1);
                for (size_t k = 0; k + 1 < cuts.size(); k += 2)
                    os << "M" << fmt(px(cuts[k].x)) << " " << fmt(py(cuts[k].y)) << "L"
                       << fmt(px(cuts[k + 1].x)) << " " << fmt(py(cuts[k + 1].y));
            }
        os << "\"/>\n";
    }

    std::vector<char> hot(static_cast<size_t>(A.size()), 0);
    if (cert)
        for (int i : cert->incident)
            if (i >= 0 && i < A.size()) hot[static_cast<size_t>(i)] = 1;
    for (int i = 0; i < A.size(); ++i) {
        const auto& p = A[i];
        if (sgn(p.z()) == 0) continue; // points at infinity are not drawable
        Rat qx = make_rat(p.x(), p.z()), qy = make_rat(p.y(), p.z());
        double x = qx.get_d(), y = qy.get_d();
        if (x < w.x0 || x > w.x1 || y < w.y0 || y > w.y1) continue;
        if (hot[static_cast<size_t>(i)])
            os << "<circle class=\"incident\" cx=\"" << fmt(px(x)) << "\" cy=\"" << fmt(py(y))
               << "\" r=\"5\" fill=\"#d62728\"/>\n";
        else
            os << "<circle cx=\"" << fmt(px(x)) << "\" cy=\"" << fmt(py(y))
               << "\" r=\"3\" fill=\"#444444\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

} // namespace ordinary
