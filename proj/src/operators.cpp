#include "twoatom/operators.hpp"

namespace twoatom::ops {

namespace {

// Basis indices: 0 = gg, 1 = eg, 2 = ge, 3 = ee (first letter is atom 1).

Eigen::Matrix4cd make_raise1() {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(1, 0) = 1.0;  // gg -> eg
    m(3, 2) = 1.0;  // ge -> ee
    return m;
}

Eigen::Matrix4cd make_raise2() {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(2, 0) = 1.0;  // gg -> ge
    m(3, 1) = 1.0;  // eg -> ee
    return m;
}

Eigen::Matrix4cd make_z(int atom) {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    for (int i = 0; i < 4; ++i) {
        const bool excited = (atom == 1) ? (i == 1 || i == 3) : (i == 2 || i == 3);
        m(i, i) = excited ? 0.5 : -0.5;
    }
    return m;
}

}  // namespace

const Eigen::Matrix4cd& raise1() {
    static const Eigen::Matrix4cd m = make_raise1();
    return m;
}

const Eigen::Matrix4cd& lower1() {
    static const Eigen::Matrix4cd m = make_raise1().adjoint();
    return m;
}

const Eigen::Matrix4cd& raise2() {
    static const Eigen::Matrix4cd m = make_raise2();
    return m;
}

const Eigen::Matrix4cd& lower2() {
    static const Eigen::Matrix4cd m = make_raise2().adjoint();
    return m;
}

const Eigen::Matrix4cd& z1() {
    static const Eigen::Matrix4cd m = make_z(1);
    return m;
}

const Eigen::Matrix4cd& z2() {
    static const Eigen::Matrix4cd m = make_z(2);
    return m;
}

const Eigen::Matrix4cd& identity() {
    static const Eigen::Matrix4cd m = Eigen::Matrix4cd::Identity();
    return m;
}

Eigen::Matrix4cd ground_projector() {
    Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
    m(0, 0) = 1.0;
    return m;
}

}  // namespace twoatom::ops
