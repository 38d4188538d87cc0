#include "jetcm/atom.hpp"

#include "jetcm/error.hpp"

#include <algorithm>

namespace jetcm {

MultiIndex::MultiIndex(std::vector<int> entries) : entries_(std::move(entries)) {
    for (int e : entries_)
        if (e < 0) throw Error(ErrorKind::DomainError, "negative multi-index entry");
}

MultiIndex MultiIndex::zeros(int n) {
    return MultiIndex(std::vector<int>(static_cast<size_t>(n), 0));
}

int MultiIndex::order() const {
    int s = 0;
    for (int e : entries_) s += e;
    return s;
}

MultiIndex MultiIndex::bumped(int k) const {
    std::vector<int> e = entries_;
    e.at(static_cast<size_t>(k)) += 1;
    return MultiIndex(std::move(e));
}

bool MultiIndex::dominates(const MultiIndex& other) const {
    if (size() != other.size()) return false;
    for (int k = 0; k < size(); ++k)
        if (entries_[static_cast<size_t>(k)] < other[k]) return false;
    return true;
}

MultiIndex MultiIndex::minus(const MultiIndex& other) const {
    std::vector<int> e(entries_.size());
    for (size_t k = 0; k < entries_.size(); ++k)
        e[k] = entries_[k] - other.entries_[k];
    return MultiIndex(std::move(e));
}

std::strong_ordering MultiIndex::operator<=>(const MultiIndex& o) const {
    if (auto c = order() <=> o.order(); c != 0) return c;
    if (auto c = entries_.size() <=> o.entries_.size(); c != 0) return c;
    for (size_t k = 0; k < entries_.size(); ++k)
        if (auto c = entries_[k] <=> o.entries_[k]; c != 0) return c;
    return std::strong_ordering::equal;
}

std::vector<MultiIndex> multi_indices_of_order(int n, int order) {
    std::vector<MultiIndex> out;
    std::vector<int> cur(static_cast<size_t>(n), 0);
    // lexicographic enumeration of compositions of `order` into n parts
    auto rec = [&](auto&& self, int pos, int remaining) -> void {
        if (pos == n - 1) {
            cur[static_cast<size_t>(pos)] = remaining;
            out.emplace_back(cur);
            return;
        }
        for (int v = remaining; v >= 0; --v) {
            cur[static_cast<size_t>(pos)] = v;
            self(self, pos + 1, remaining - v);
        }
    };
    if (n == 0) return out;
    rec(rec, 0, order);
    return out;
}

Atom Atom::independent(int i) {
    Atom a;
    a.kind_ = Kind::Independent;
    a.index_ = i;
    return a;
}

Atom Atom::dependent(int j, MultiIndex alpha) {
    Atom a;
    a.kind_ = Kind::Dependent;
    a.index_ = j;
    a.alpha_ = std::move(alpha);
    return a;
}

Atom Atom::parameter(std::string name) {
    Atom a;
    a.kind_ = Kind::Parameter;
    a.name_ = std::move(name);
    return a;
}

Atom Atom::func_deriv(std::string name, int arg_index, int order) {
    if (order < 0) throw Error(ErrorKind::DomainError, "negative function derivative order");
    Atom a;
    a.kind_ = Kind::FuncDeriv;
    a.name_ = std::move(name);
    a.index_ = arg_index;
    a.order_ = order;
    return a;
}

bool Atom::operator==(const Atom& o) const {
    return (*this <=> o) == std::strong_ordering::equal;
}

std::strong_ordering Atom::operator<=>(const Atom& o) const {
    if (auto c = static_cast<int>(kind_) <=> static_cast<int>(o.kind_); c != 0) return c;
    switch (kind_) {
    case Kind::Independent:
        return index_ <=> o.index_;
    case Kind::Dependent:
        if (auto c = index_ <=> o.index_; c != 0) return c;
        return alpha_ <=> o.alpha_;
    case Kind::Parameter:
        return name_.compare(o.name_) <=> 0;
    case Kind::FuncDeriv:
        if (auto c = name_.compare(o.name_) <=> 0; c != 0) return c;
        if (auto c = index_ <=> o.index_; c != 0) return c;
        return order_ <=> o.order_;
    }
    return std::strong_ordering::equal;
}

JetContext::JetContext(std::vector<std::string> independents,
                       std::vector<std::string> dependents,
                       std::vector<std::string> parameters,
                       std::map<std::string, int> functions)
    : independents_(std::move(independents)),
      dependents_(std::move(dependents)),
      parameters_(std::move(parameters)),
      functions_(std::move(functions)) {
    if (independents_.empty()) throw Error(ErrorKind::DomainError, "context needs at least one independent variable");
    if (dependents_.empty()) throw Error(ErrorKind::DomainError, "context needs at least one dependent variable");
    std::vector<std::string> all = independents_;
    all.insert(all.end(), dependents_.begin(), dependents_.end());
    all.insert(all.end(), parameters_.begin(), parameters_.end());
    for (const auto& [f, arg] : functions_) {
        all.push_back(f);
        if (arg < 0 || arg >= n())
            throw Error(ErrorKind::ArityError, "function argument out of range: " + f);
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) != all.end())
        throw Error(ErrorKind::DomainError, "variable names must be pairwise distinct");
}

std::optional<int> JetContext::find_independent(const std::string& name) const {
    for (int i = 0; i < n(); ++i)
        if (independents_[static_cast<size_t>(i)] == name) return i;
    return std::nullopt;
}

std::optional<int> JetContext::find_dependent(const std::string& name) const {
    for (int j = 0; j < m(); ++j)
        if (dependents_[static_cast<size_t>(j)] == name) return j;
    return std::nullopt;
}

bool JetContext::has_parameter(const std::string& name) const {
    return std::find(parameters_.begin(), parameters_.end(), name) != parameters_.end();
}

std::optional<int> JetContext::function_argument(const std::string& name) const {
    auto it = functions_.find(name);
    if (it == functions_.end()) return std::nullopt;
    return it->second;
}

void JetContext::check_disjoint(const std::string& name) const {
    if (find_independent(name) || find_dependent(name) || has_parameter(name) ||
        functions_.count(name))
        throw Error(ErrorKind::DomainError, "name already declared: " + name);
}

void JetContext::add_parameter(const std::string& name) {
    check_disjoint(name);
    parameters_.push_back(name);
}

void JetContext::add_function(const std::string& name, int arg_index) {
    check_disjoint(name);
    if (arg_index < 0 || arg_index >= n())
        throw Error(ErrorKind::ArityError, "function argument out of range: " + name);
    functions_[name] = arg_index;
}

} // namespace jetcm
