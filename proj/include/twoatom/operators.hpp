#pragma once

#include <Eigen/Dense>

namespace twoatom::ops {

// Fixed 4x4 operators of the pair in the product basis ordered
// (g1g2, e1g2, g1e2, e1e2).

const Eigen::Matrix4cd& raise1();    // S1+ = |e1><g1|
const Eigen::Matrix4cd& lower1();    // S1-
const Eigen::Matrix4cd& raise2();    // S2+
const Eigen::Matrix4cd& lower2();    // S2-
const Eigen::Matrix4cd& z1();        // S1z = (|e1><e1| - |g1><g1|)/2
const Eigen::Matrix4cd& z2();        // S2z
const Eigen::Matrix4cd& identity();

Eigen::Matrix4cd ground_projector();  // |g1g2><g1g2|

}  // namespace twoatom::ops
