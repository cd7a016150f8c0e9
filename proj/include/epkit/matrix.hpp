#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "epkit/scalars.hpp"

namespace epkit {

// Dense matrix over an exact scalar type (Rat, Gauss, or Mod).
//
// Matrices with a zero dimension are legal; they arise as bases of trivial
// subspaces and as rank factors of the zero matrix. Every matrix built
// through the named constructors carries a model scalar so that products
// with an empty inner dimension can still produce zero entries of the
// right kind (for Mod, the right modulus).
template <typename S>
class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols, const S& fill)
        : rows_(rows), cols_(cols), data_(rows * cols, fill),
          model_(zero_like(fill)), has_model_(true) {}

    static Matrix zero(std::size_t rows, std::size_t cols, const S& model) {
        return Matrix(rows, cols, zero_like(model));
    }
    static Matrix identity(std::size_t n, const S& model) {
        Matrix m = zero(n, n, model);
        for (std::size_t i = 0; i < n; ++i) m.at(i, i) = one_like(model);
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool has_model() const { return has_model_; }

    S& at(std::size_t r, std::size_t c) {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
        return data_[r * cols_ + c];
    }
    const S& at(std::size_t r, std::size_t c) const {
        if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index");
        return data_[r * cols_ + c];
    }

    const S& model() const {
        if (!has_model_) throw std::logic_error("matrix has no model scalar");
        return model_;
    }

    Matrix operator+(const Matrix& o) const {
        check_same_shape(o);
        Matrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] + o.data_[i];
        return out;
    }
    Matrix operator-(const Matrix& o) const {
        check_same_shape(o);
        Matrix out = *this;
        for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] = data_[i] - o.data_[i];
        return out;
    }
    Matrix operator-() const {
        Matrix out = *this;
        for (auto& x : out.data_) x = -x;
        return out;
    }
    Matrix operator*(const Matrix& o) const {
        if (cols_ != o.rows_) throw std::invalid_argument("matrix product shape mismatch");
        const S* m = nullptr;
        if (!data_.empty()) m = &data_[0];
        else if (!o.data_.empty()) m = &o.data_[0];
        else if (has_model_) m = &model_;
        else if (o.has_model_) m = &o.model_;
        if (!m) {
            if (rows_ * o.cols_ != 0)
                throw std::logic_error("matrix product needs a model scalar");
            Matrix out;
            out.rows_ = rows_;
            out.cols_ = o.cols_;
            return out;
        }
        Matrix out = zero(rows_, o.cols_, *m);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t k = 0; k < cols_; ++k) {
                const S& aik = at(i, k);
                if (is_zero(aik)) continue;
                for (std::size_t j = 0; j < o.cols_; ++j)
                    out.at(i, j) = out.at(i, j) + aik * o.at(k, j);
            }
        return out;
    }

    // Shape and entries only; the model scalar is bookkeeping, not content.
    bool operator==(const Matrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }
    bool operator!=(const Matrix& o) const { return !(*this == o); }

    Matrix transpose() const {
        Matrix out = zero_keep_model(cols_, rows_);
        for (std::size_t i = 0; i < rows_; ++i)
            for (std::size_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
        return out;
    }
    Matrix conj_transpose() const {
        Matrix out = transpose();
        for (auto& x : out.data_) x = conj_scalar(x);
        return out;
    }

    bool all_zero() const {
        for (const auto& x : data_)
            if (!is_zero(x)) return false;
        return true;
    }

    // Row-major flat access, used by enumeration and hashing.
    const std::vector<S>& flat() const { return data_; }
    std::vector<S>& flat() { return data_; }

private:
    Matrix zero_keep_model(std::size_t rows, std::size_t cols) const {
        if (has_model_) return zero(rows, cols, model_);
        if (rows * cols != 0) throw std::logic_error("matrix has no model scalar");
        Matrix out;
        out.rows_ = rows;
        out.cols_ = cols;
        return out;
    }
    void check_same_shape(const Matrix& o) const {
        if (rows_ != o.rows_ || cols_ != o.cols_)
            throw std::invalid_argument("matrix shape mismatch");
    }

    std::size_t rows_, cols_;
    std::vector<S> data_;
    S model_{};
    bool has_model_ = false;
};

template <typename S>
std::string matrix_to_string(const Matrix<S>& m) {
    std::string out = "[";
    for (std::size_t i = 0; i < m.rows(); ++i) {
        out += i ? ",[" : "[";
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out += ",";
            out += scalar_to_string(m.at(i, j));
        }
        out += "]";
    }
    out += "]";
    return out;
}

}  // namespace epkit
