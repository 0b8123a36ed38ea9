#ifndef OPUC_REPORT_HPP
#define OPUC_REPORT_HPP

#include <string>
#include <vector>

#include "opuc/numeric.hpp"

namespace opuc {

template <class R>
struct ResidualReport {
    std::string label;
    std::vector<R> grid;       // angles (or the index n for per-n tables)
    std::vector<R> residuals;  // same length as grid
    R sup{};
    R scale{};                 // sup of the left-hand side, for relative context
    R tolerance{};
    bool pass = false;

    static ResidualReport from(std::string label, std::vector<R> grid,
                               std::vector<R> residuals, R tolerance, R scale = R(0)) {
        ResidualReport rep;
        rep.label = std::move(label);
        rep.grid = std::move(grid);
        rep.residuals = std::move(residuals);
        rep.tolerance = tolerance;
        rep.scale = scale;
        rep.sup = R(0);
        for (const R& r : rep.residuals)
            if (r > rep.sup) rep.sup = r;
        rep.pass = rep.sup <= tolerance;
        return rep;
    }
};

}  // namespace opuc

#endif
