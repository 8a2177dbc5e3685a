#include "wcpswf/figures.hpp"

#include <stdexcept>

namespace wcpswf {

std::vector<FigurePanel> figure_panels(int figure) {
    using PC = PanelComponent;
    switch (figure) {
        case 1:
            return {
                {1, "1a", false, 0, 1, -0.5, 0.0, PC::Radial},
                {1, "1b", false, 0, 1, 0.0, 0.0, PC::Radial},
                {1, "1c", false, 0, 1, 2.0, 0.0, PC::Radial},
                {1, "1d", false, 2, 1, -0.9, 0.0, PC::BladeE1},
                {1, "1e", false, 4, 1, -0.9, 0.0, PC::BladeE1},
                {1, "1f", false, 6, 1, -0.9, 0.0, PC::BladeE1},
            };
        case 2:
            return {
                {2, "2a", false, 4, 1, -0.9, 0.0, PC::Radial},
                {2, "2b", false, 5, 0, -0.9, 0.0, PC::Radial},
            };
        case 3:
            return {
                {3, "3a", false, 1, 1, -0.9, 0.0, PC::Radial},
                {3, "3b", false, 1, 1, 0.0, 0.0, PC::Radial},
                {3, "3c", false, 1, 1, 6.0, 0.0, PC::Radial},
                {3, "3d", false, 1, 1, 1.0, 0.0, PC::BladeE12},
                {3, "3e", false, 3, 1, 1.0, 0.0, PC::BladeE12},
                {3, "3f", false, 5, 1, 1.0, 0.0, PC::BladeE12},
            };
        case 4:
            return {
                {4, "4a", true, 0, 1, -0.9, 1.0, PC::Radial},
                {4, "4b", true, 0, 1, -0.8, 1.0, PC::Radial},
                {4, "4c", true, 0, 1, -0.2, 1.0, PC::Radial},
                {4, "4d", true, 0, 1, 2.0, 1.0, PC::Radial},
            };
        case 5:
            return {
                {5, "5a", true, 0, 1, -0.9, 1.0, PC::BladeE1},
                {5, "5b", true, 0, 1, -0.8, 1.0, PC::BladeE1},
                {5, "5c", true, 0, 1, -0.2, 1.0, PC::BladeE1},
                {5, "5d", true, 0, 1, 2.0, 1.0, PC::BladeE1},
            };
        case 6:
            return {
                {6, "6a", true, 3, 1, -0.5, 1.0, PC::BladeE12},
                {6, "6b", true, 3, 1, 4.0, 1.0, PC::BladeE12},
                {6, "6c", true, 5, 1, -0.5, 1.0, PC::BladeScalar},
                {6, "6d", true, 5, 1, 1.5, 1.0, PC::BladeScalar},
            };
        case 7:
            return {
                {7, "7a", true, 6, 2, 1.0, 2.0, PC::BladeE1},
                {7, "7b", true, 7, 1, 1.0, 2.0, PC::BladeScalar},
            };
        default:
            throw std::invalid_argument("figure_panels: figure must be in 1..7");
    }
}

} // namespace wcpswf
