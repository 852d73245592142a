#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace stabcv {

/// Dense row-major matrix of signed 64-bit integers.
class IntMatrix {
 public:
  using value_type = std::int64_t;

  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols, value_type fill = 0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  IntMatrix(std::initializer_list<std::initializer_list<value_type>> rows);

  static IntMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  value_type& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  value_type operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const value_type> row(std::size_t i) const {
    return {data_.data() + i * cols_, cols_};
  }

  IntMatrix transpose() const;

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

  std::vector<std::vector<value_type>> to_nested() const;
  static IntMatrix from_nested(const std::vector<std::vector<value_type>>& rows);

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

}  // namespace stabcv
