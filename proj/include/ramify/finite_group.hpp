#pragma once

#include <memory>
#include <string>
#include <vector>

namespace ramify {

/// A finite group given by its multiplication table; element 0 is the identity.
class FiniteGroup {
public:
    /// table[a][b] = a * b.
    FiniteGroup(std::string name, std::vector<std::vector<int>> table);

    static std::shared_ptr<const FiniteGroup> cyclic(int n);
    static std::shared_ptr<const FiniteGroup> symmetric3();
    /// "C<n>", "S3", or "trivial".
    static std::shared_ptr<const FiniteGroup> named(const std::string& name);

    const std::string& name() const noexcept { return name_; }
    int order() const noexcept { return static_cast<int>(table_.size()); }
    int mul(int a, int b) const { return table_[a][b]; }
    int inv(int a) const { return inverse_[a]; }
    int identity() const noexcept { return 0; }
    int element_order(int a) const { return orders_[a]; }
    int exponent() const noexcept { return exponent_; }

    const std::vector<std::vector<int>>& classes() const noexcept { return classes_; }
    int class_of(int a) const { return class_of_[a]; }
    /// Representative (smallest index) of each class.
    int class_rep(int c) const { return classes_[c].front(); }

    /// Elements whose order is a power of p (always contains the identity).
    std::vector<int> p_power_elements(unsigned p) const;

    /// Element labels used in reports: "id", then "σ" for groups of order two,
    /// otherwise "g1", "g2", ...
    std::string element_name(int a) const;

private:
    std::string name_;
    std::vector<std::vector<int>> table_;
    std::vector<int> inverse_;
    std::vector<int> orders_;
    int exponent_ = 1;
    std::vector<std::vector<int>> classes_;
    std::vector<int> class_of_;
};

}  // namespace ramify
