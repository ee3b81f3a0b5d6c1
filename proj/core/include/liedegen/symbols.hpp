#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "liedegen/error.hpp"

namespace liedegen {

class Symbols;
using SymbolsPtr = std::shared_ptr<const Symbols>;

/// Ordered variable set of the coefficient field Q(t, p1, ..., pk).
///
/// The deformation variable `t` is always present and always first; the
/// remaining symbols are the parameters declared for a file or session.
/// Instances are immutable and shared by every value built over them.
class Symbols {
public:
    static constexpr std::size_t kDeformationVar = 0;

    /// Builds {t, parameters...}. Rejects duplicates and a redeclared "t".
    static SymbolsPtr make(const std::vector<std::string>& parameters = {});

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    /// Parameters only (everything after t).
    std::vector<std::string> parameters() const;

    std::optional<std::size_t> index_of(std::string_view name) const;

    friend bool operator==(const Symbols& a, const Symbols& b) { return a.names_ == b.names_; }
    friend bool operator!=(const Symbols& a, const Symbols& b) { return !(a == b); }

private:
    explicit Symbols(std::vector<std::string> names) : names_(std::move(names)) {}

    std::vector<std::string> names_;
};

/// True when both pointers describe the same variable list.
inline bool same_symbols(const SymbolsPtr& a, const SymbolsPtr& b) {
    return a == b || (a && b && *a == *b);
}

/// Throws DimensionError unless the two variable sets agree.
void require_same_symbols(const SymbolsPtr& a, const SymbolsPtr& b);

}  // namespace liedegen
