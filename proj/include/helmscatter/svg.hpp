#pragma once

#include <string>
#include <vector>

namespace helm {

// Minimal deterministic SVG plotter: polyline series and scatter points on a
// single axis box, linear or log10 y scale.
class SvgPlot {
  public:
    SvgPlot(std::string title, std::string xlabel, std::string ylabel,
            bool logy = false);
    void add_series(const std::string& label, const std::vector<double>& x,
                    const std::vector<double>& y);
    void add_scatter(const std::string& label, const std::vector<double>& x,
                     const std::vector<double>& y);
    void write(const std::string& path) const;

  private:
    struct Series {
        std::string label;
        std::vector<double> x, y;
        bool scatter;
    };
    std::string title_, xlabel_, ylabel_;
    bool logy_;
    std::vector<Series> series_;
};

} // namespace helm
