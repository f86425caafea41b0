#pragma once

#include <cstddef>
#include <vector>

namespace schemewalk {

/// Dense cube of structure constants indexed (k, i, j) or (a, b, c),
/// stored row-major in that order.
template <class T>
class Tensor3 {
public:
    Tensor3() = default;
    explicit Tensor3(int extent, T fill = T{})
        : extent_(extent), data_(static_cast<std::size_t>(extent) * extent * extent, fill)
    {
    }

    int extent() const { return extent_; }

    T& operator()(int a, int b, int c) { return data_[index(a, b, c)]; }
    const T& operator()(int a, int b, int c) const { return data_[index(a, b, c)]; }

    const std::vector<T>& data() const { return data_; }

    friend bool operator==(const Tensor3&, const Tensor3&) = default;

private:
    std::size_t index(int a, int b, int c) const
    {
        return (static_cast<std::size_t>(a) * extent_ + b) * extent_ + c;
    }

    int extent_ = 0;
    std::vector<T> data_;
};

} // namespace schemewalk
