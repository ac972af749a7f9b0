#pragma once

#include <string>
#include <vector>

namespace hrs {

/// One curve of a log-FER plot. Points with y <= 0 are skipped (zero-error
/// simulation points have no log representation).
struct PlotSeries {
    std::string label;
    std::vector<double> x;  // dB
    std::vector<double> y;  // FER, plotted on a log10 axis
    bool dashed = false;
    bool markers = false;
};

/// Writes a standalone SVG line plot: linear x (dB), log10 y. No external
/// renderer or font dependencies beyond generic SVG text.
void write_svg_plot(const std::string& path, const std::string& title,
                    const std::vector<PlotSeries>& series,
                    const std::string& x_label = "average SNR (dB)",
                    const std::string& y_label = "FER");

}  // namespace hrs
