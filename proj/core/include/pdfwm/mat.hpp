#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace pdfwm {

// Dense row-major matrix of doubles. The real-valued carrier for transforms
// and the frequency-domain pipeline.
class Mat {
public:
    Mat() = default;
    Mat(int rows, int cols, double fill = 0.0)
        : rows_(rows), cols_(cols),
          v_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols),
             fill) {
        assert(rows >= 0 && cols >= 0);
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    bool empty() const { return v_.empty(); }

    double& at(int r, int c) {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return v_[static_cast<std::size_t>(r) * cols_ + c];
    }
    double at(int r, int c) const {
        assert(r >= 0 && r < rows_ && c >= 0 && c < cols_);
        return v_[static_cast<std::size_t>(r) * cols_ + c];
    }

    std::vector<double>& data() { return v_; }
    const std::vector<double>& data() const { return v_; }

    bool same_dims(const Mat& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_;
    }

private:
    int rows_ = 0;
    int cols_ = 0;
    std::vector<double> v_;
};

}  // namespace pdfwm
