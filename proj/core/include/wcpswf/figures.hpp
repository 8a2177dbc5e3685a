#ifndef WCPSWF_FIGURES_HPP
#define WCPSWF_FIGURES_HPP

// Canned parameter sets for the plot-data command: one entry per panel,
// CGP panels identified by (n, k, alpha), CPSWF panels by
// (n, k, alpha, c).  Component selects what the panel plots.

#include <string>
#include <vector>

namespace wcpswf {

enum class PanelComponent { Radial, BladeScalar, BladeE1, BladeE12 };

struct FigurePanel {
    int figure = 1;
    std::string label;      // e.g. "1a"
    bool is_cpswf = false;  // otherwise a plain CGP panel
    int n = 0;
    int k = 0;
    double alpha = 0.0;
    double c = 0.0;         // CPSWF bandwidth (unused for CGP panels)
    PanelComponent component = PanelComponent::Radial;
};

// All panels of the given figure (1..7).
std::vector<FigurePanel> figure_panels(int figure);

} // namespace wcpswf

#endif
