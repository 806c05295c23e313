#include "helmscatter/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <stdexcept>

namespace helm {

namespace {

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                         "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f",
                         "#bcbd22", "#e377c2"};

std::string num(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

SvgPlot::SvgPlot(std::string title, std::string xlabel, std::string ylabel,
                 bool logy)
    : title_(std::move(title)), xlabel_(std::move(xlabel)),
      ylabel_(std::move(ylabel)), logy_(logy) {}

void SvgPlot::add_series(const std::string& label,
                         const std::vector<double>& x,
                         const std::vector<double>& y) {
    series_.push_back({label, x, y, false});
}

void SvgPlot::add_scatter(const std::string& label,
                          const std::vector<double>& x,
                          const std::vector<double>& y) {
    series_.push_back({label, x, y, true});
}

void SvgPlot::write(const std::string& path) const {
    const double w = 720, h = 480;
    const double ml = 70, mr = 20, mt = 40, mb = 50;

    double xmin = std::numeric_limits<double>::max(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& s : series_)
        for (size_t i = 0; i < s.x.size(); ++i) {
            double yv = s.y[i];
            if (logy_) {
                if (yv <= 0) continue;
                yv = std::log10(yv);
            }
            xmin = std::min(xmin, s.x[i]);
            xmax = std::max(xmax, s.x[i]);
            ymin = std::min(ymin, yv);
            ymax = std::max(ymax, yv);
        }
    if (xmin > xmax) {
        xmin = 0;
        xmax = 1;
        ymin = 0;
        ymax = 1;
    }
    if (xmax == xmin) xmax = xmin + 1;
    if (ymax == ymin) ymax = ymin + 1;

    auto px = [&](double v) {
        return ml + (v - xmin) / (xmax - xmin) * (w - ml - mr);
    };
    auto py = [&](double v) {
        if (logy_) v = std::log10(std::max(v, 1e-300));
        return h - mb - (v - ymin) / (ymax - ymin) * (h - mt - mb);
    };

    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot write " + path);
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
       << "\" height=\"" << h << "\">\n";
    os << "<rect width=\"" << w << "\" height=\"" << h
       << "\" fill=\"white\"/>\n";
    os << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << w - ml - mr
       << "\" height=\"" << h - mt - mb
       << "\" fill=\"none\" stroke=\"black\"/>\n";
    os << "<text x=\"" << w / 2 << "\" y=\"20\" text-anchor=\"middle\">"
       << title_ << "</text>\n";
    os << "<text x=\"" << w / 2 << "\" y=\"" << h - 10
       << "\" text-anchor=\"middle\">" << xlabel_ << "</text>\n";
    os << "<text x=\"15\" y=\"" << h / 2
       << "\" text-anchor=\"middle\" transform=\"rotate(-90 15 " << h / 2
       << ")\">" << ylabel_ << (logy_ ? " (log)" : "") << "</text>\n";
    // corner ticks
    os << "<text x=\"" << ml << "\" y=\"" << h - mb + 16 << "\">" << num(xmin)
       << "</text>\n";
    os << "<text x=\"" << w - mr << "\" y=\"" << h - mb + 16
       << "\" text-anchor=\"end\">" << num(xmax) << "</text>\n";
    os << "<text x=\"" << ml - 4 << "\" y=\"" << h - mb
       << "\" text-anchor=\"end\">"
       << num(logy_ ? std::pow(10.0, ymin) : ymin) << "</text>\n";
    os << "<text x=\"" << ml - 4 << "\" y=\"" << mt + 10
       << "\" text-anchor=\"end\">"
       << num(logy_ ? std::pow(10.0, ymax) : ymax) << "</text>\n";

    for (size_t si = 0; si < series_.size(); ++si) {
        const auto& s = series_[si];
        const char* color = kColors[si % 10];
        if (s.scatter) {
            for (size_t i = 0; i < s.x.size(); ++i) {
                if (logy_ && s.y[i] <= 0) continue;
                os << "<circle cx=\"" << num(px(s.x[i])) << "\" cy=\""
                   << num(py(s.y[i])) << "\" r=\"2.5\" fill=\"" << color
                   << "\"/>\n";
            }
        } else {
            os << "<polyline fill=\"none\" stroke=\"" << color
               << "\" points=\"";
            for (size_t i = 0; i < s.x.size(); ++i) {
                if (logy_ && s.y[i] <= 0) continue;
                os << num(px(s.x[i])) << "," << num(py(s.y[i])) << " ";
            }
            os << "\"/>\n";
        }
        os << "<text x=\"" << w - mr - 8 << "\" y=\"" << mt + 16 + 16 * si
           << "\" text-anchor=\"end\" fill=\"" << color << "\">" << s.label
           << "</text>\n";
    }
    os << "</svg>\n";
}

} // namespace helm
