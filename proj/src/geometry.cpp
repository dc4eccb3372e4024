#include "windfarm/geometry.hpp"

namespace windfarm {

template Eigen::Matrix2d rotation_matrix<double>(double);
template double circle_overlap_area<double>(const OverlapInputs<double>&);
template double circle_overlap_area<double>(double, double, double);

}  // namespace windfarm
