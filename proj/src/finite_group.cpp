#include "ramify/finite_group.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "ramify/errors.hpp"

namespace ramify {

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<int>> table)
    : name_(std::move(name)), table_(std::move(table)) {
    const int n = order();
    if (n == 0) raise(ErrorKind::InvalidArgument, "empty group table");
    for (const auto& row : table_) {
        if (static_cast<int>(row.size()) != n) raise(ErrorKind::InvalidArgument, "group table not square");
        std::vector<bool> seen(n, false);
        for (int x : row) {
            if (x < 0 || x >= n || seen[x]) raise(ErrorKind::InvalidArgument, "group table row is not a permutation");
            seen[x] = true;
        }
    }
    for (int a = 0; a < n; ++a)
        if (table_[0][a] != a || table_[a][0] != a)
            raise(ErrorKind::InvalidArgument, "element 0 is not the identity");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c)
                if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
                    raise(ErrorKind::InvalidArgument, "group table is not associative");

    inverse_.assign(n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table_[a][b] == 0) inverse_[a] = b;

    orders_.assign(n, 1);
    for (int a = 0; a < n; ++a) {
        int x = a, k = 1;
        while (x != 0) {
            x = table_[x][a];
            ++k;
        }
        orders_[a] = k;
        exponent_ = std::lcm(exponent_, k);
    }

    class_of_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
        if (class_of_[a] >= 0) continue;
        std::vector<int> cls;
        for (int g = 0; g < n; ++g) {
            const int c = table_[table_[g][a]][inverse_[g]];
            if (class_of_[c] < 0) {
                class_of_[c] = static_cast<int>(classes_.size());
                cls.push_back(c);
            }
        }
        std::sort(cls.begin(), cls.end());
        classes_.push_back(std::move(cls));
    }
}

std::shared_ptr<const FiniteGroup> FiniteGroup::cyclic(int n) {
    if (n < 1) raise(ErrorKind::InvalidArgument, "cyclic group order must be positive");
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return std::make_shared<FiniteGroup>(n == 1 ? "trivial" : "C" + std::to_string(n), std::move(t));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::symmetric3() {
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do perms.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    const int n = static_cast<int>(perms.size());
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
            t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
        }
    return std::make_shared<FiniteGroup>("S3", std::move(t));
}

std::shared_ptr<const FiniteGroup> FiniteGroup::named(const std::string& name) {
    if (name == "S3") return symmetric3();
    if (name == "trivial") return cyclic(1);
    if (name.size() >= 2 && name[0] == 'C') {
        try {
            std::size_t pos = 0;
            const int n = std::stoi(name.substr(1), &pos);
            if (pos == name.size() - 1 && n >= 1 && n <= 64) return cyclic(n);
        } catch (const std::exception&) {
        }
    }
    raise(ErrorKind::InvalidArgument, "unknown group '" + name + "'");
}

std::vector<int> FiniteGroup::p_power_elements(unsigned p) const {
    std::vector<int> out;
    for (int a = 0; a < order(); ++a) {
        int k = orders_[a];
        if (p >= 2)
            while (k % static_cast<int>(p) == 0) k /= static_cast<int>(p);
        if (k == 1) out.push_back(a);
    }
    return out;
}

std::string FiniteGroup::element_name(int a) const {
    if (a == 0) return "id";
    if (order() == 2) return "σ";
    return "g" + std::to_string(a);
}

}  // namespace ramify
