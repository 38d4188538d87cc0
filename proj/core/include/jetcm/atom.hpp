#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace jetcm {

/// Derivative multi-index over the independent variables: entry k counts
/// derivatives in direction k.
class MultiIndex {
public:
    MultiIndex() = default;
    explicit MultiIndex(std::vector<int> entries);
    static MultiIndex zeros(int n);

    int size() const { return static_cast<int>(entries_.size()); }
    int operator[](int k) const { return entries_[static_cast<size_t>(k)]; }
    const std::vector<int>& entries() const { return entries_; }

    /// |alpha|, the total derivative order.
    int order() const;

    /// alpha + 1_k.
    MultiIndex bumped(int k) const;

    /// componentwise alpha >= other.
    bool dominates(const MultiIndex& other) const;
    /// componentwise difference; requires dominates(other).
    MultiIndex minus(const MultiIndex& other) const;

    bool is_zero() const { return order() == 0; }

    bool operator==(const MultiIndex& o) const { return entries_ == o.entries_; }
    std::strong_ordering operator<=>(const MultiIndex& o) const;

private:
    std::vector<int> entries_;
};

/// Enumerates all multi-indices of length n with |alpha| == order.
std::vector<MultiIndex> multi_indices_of_order(int n, int order);

/// A coordinate symbol of the jet space: an independent variable x_i, a jet
/// coordinate u^j_alpha, a scalar parameter, or the k-th derivative of a
/// declared unknown function of one independent variable.
class Atom {
public:
    enum class Kind { Independent, Dependent, Parameter, FuncDeriv };

    static Atom independent(int i);
    static Atom dependent(int j, MultiIndex alpha);
    static Atom parameter(std::string name);
    static Atom func_deriv(std::string name, int arg_index, int order);

    Kind kind() const { return kind_; }
    bool is_independent() const { return kind_ == Kind::Independent; }
    bool is_dependent() const { return kind_ == Kind::Dependent; }
    bool is_parameter() const { return kind_ == Kind::Parameter; }
    bool is_func_deriv() const { return kind_ == Kind::FuncDeriv; }

    /// Independent: variable index.  Dependent: dependent index j.
    /// FuncDeriv: index of the argument variable.
    int index() const { return index_; }
    const MultiIndex& alpha() const { return alpha_; }
    /// Parameter or function name.
    const std::string& name() const { return name_; }
    /// FuncDeriv derivative order (0 = the function itself).
    int deriv_order() const { return order_; }

    bool operator==(const Atom& o) const;
    std::strong_ordering operator<=>(const Atom& o) const;

private:
    Kind kind_ = Kind::Independent;
    int index_ = 0;
    int order_ = 0;
    MultiIndex alpha_;
    std::string name_;
};

/// Declares the coordinate chart: independent/dependent variable names,
/// parameter names, and the unknown single-argument functions.
class JetContext {
public:
    JetContext() = default;
    JetContext(std::vector<std::string> independents,
               std::vector<std::string> dependents,
               std::vector<std::string> parameters = {},
               std::map<std::string, int> functions = {});

    int n() const { return static_cast<int>(independents_.size()); }
    int m() const { return static_cast<int>(dependents_.size()); }

    const std::vector<std::string>& independents() const { return independents_; }
    const std::vector<std::string>& dependents() const { return dependents_; }
    const std::vector<std::string>& parameters() const { return parameters_; }
    /// function name -> index of its argument variable
    const std::map<std::string, int>& functions() const { return functions_; }

    std::optional<int> find_independent(const std::string& name) const;
    std::optional<int> find_dependent(const std::string& name) const;
    bool has_parameter(const std::string& name) const;
    std::optional<int> function_argument(const std::string& name) const;

    void add_parameter(const std::string& name);
    void add_function(const std::string& name, int arg_index);

private:
    void check_disjoint(const std::string& name) const;

    std::vector<std::string> independents_;
    std::vector<std::string> dependents_;
    std::vector<std::string> parameters_;
    std::map<std::string, int> functions_;
};

} // namespace jetcm
