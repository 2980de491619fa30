#pragma once

#include "gqc/lincode.hpp"

namespace testcodes {

inline gqc::LinearCode hamming() {
    const gqc::Field f = gqc::Field::of_order(2);
    return gqc::LinearCode(gqc::Matrix::from_rows(
        f, {{1, 0, 0, 0, 0, 1, 1}, {0, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 0, 1, 1, 0}, {0, 0, 0, 1, 1, 1, 1}}));
}

inline gqc::LinearCode simplex() {
    const gqc::Field f = gqc::Field::of_order(2);
    return gqc::LinearCode(
        gqc::Matrix::from_rows(f, {{0, 0, 0, 1, 1, 1, 1}, {0, 1, 1, 0, 0, 1, 1}, {1, 0, 1, 0, 1, 0, 1}}));
}

inline gqc::LinearCode from_rows(unsigned q, const std::vector<gqc::Vector>& rows) {
    return gqc::LinearCode(gqc::Matrix::from_rows(gqc::Field::of_order(q), rows));
}

}  // namespace testcodes
