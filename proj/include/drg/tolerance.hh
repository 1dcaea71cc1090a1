#ifndef DRG_TOLERANCE_HH
#define DRG_TOLERANCE_HH

#include <algorithm>
#include <cmath>

namespace drg
{
    /// Residual tolerance, relative to the magnitude of the quantity checked:
    /// a residual r against an operand of size s passes when r <= base * max(1, s).
    struct Tolerance
    {
        double base = 1e-8;

        auto scaled(double magnitude) const -> double
        {
            return base * std::max(1.0, std::abs(magnitude));
        }

        auto accepts(double residual, double magnitude) const -> bool
        {
            return residual <= scaled(magnitude);
        }
    };
}

#endif
