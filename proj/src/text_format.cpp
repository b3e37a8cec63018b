#include "hhcalc/text_format.hpp"

#include <algorithm>
#include <sstream>

namespace hhcalc {

namespace {

std::string centered(const std::string& s, std::size_t width) {
    if (s.size() >= width) return s;
    const std::size_t left = (width - s.size()) / 2;
    return std::string(left, ' ') + s + std::string(width - s.size() - left, ' ');
}

void rtrim(std::string& s) {
    while (!s.empty() && s.back() == ' ') s.pop_back();
}

} // namespace

std::string format_diamond(const HodgeDiamond& d) {
    const int N = d.dim();
    std::size_t cell = 1;
    for (int p = 0; p <= N; ++p)
        for (int q = 0; q <= N; ++q) cell = std::max(cell, d.h(p, q).str().size());
    if (cell % 2 != 0) ++cell; // even cell width keeps half-step indents exact
    const std::size_t stride = cell + 2;

    std::string out;
    for (int s = 0; s <= 2 * N; ++s) {
        const int p_hi = std::min(N, s);
        const int p_lo = std::max(0, s - N);
        std::string line(static_cast<std::size_t>(std::abs(N - s)) * stride / 2, ' ');
        for (int p = p_hi; p >= p_lo; --p) {
            line += centered(d.h(p, s - p).str(), cell);
            if (p > p_lo) line += "  ";
        }
        rtrim(line);
        out += line;
        out += '\n';
    }
    return out;
}

std::string format_dims(const GradedDims& v) {
    if (v.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [deg, dim] : v.entries()) {
        if (!first) out << " + ";
        first = false;
        out << "k";
        if (dim != 1) out << "^" << dim;
        if (deg != 0) out << "[" << -deg << "]";
    }
    return out.str();
}

std::string format_interval(const GradedInterval& v) {
    if (v.is_exact()) return "= " + format_dims(v.lo());
    return "lo " + format_dims(v.lo()) + "  /  hi " + format_dims(v.hi());
}

} // namespace hhcalc
