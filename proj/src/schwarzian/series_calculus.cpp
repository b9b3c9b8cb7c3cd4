#include "fuchsian/schwarzian.hpp"

namespace fuchsian::schwarzian {

template RationalSeries schwarzian_of_series(const RationalSeries&);
template RationalSeries schwarzian_of_series_y3(const RationalSeries&);
template ComplexSeries schwarzian_of_series(const ComplexSeries&);
template ComplexSeries schwarzian_of_series_y3(const ComplexSeries&);

}  // namespace fuchsian::schwarzian
