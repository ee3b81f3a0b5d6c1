#include "liedegen/symbols.hpp"

#include <algorithm>

namespace liedegen {

SymbolsPtr Symbols::make(const std::vector<std::string>& parameters) {
    std::vector<std::string> names;
    names.reserve(parameters.size() + 1);
    names.emplace_back("t");
    for (const auto& p : parameters) {
        if (p == "t")
            throw SyntaxError("symbol 't' is reserved for the deformation variable");
        if (p.empty())
            throw SyntaxError("empty parameter name");
        if (std::find(names.begin(), names.end(), p) != names.end())
            throw SyntaxError("duplicate parameter '" + p + "'");
        names.push_back(p);
    }
    return SymbolsPtr(new Symbols(std::move(names)));
}

std::vector<std::string> Symbols::parameters() const {
    return {names_.begin() + 1, names_.end()};
}

std::optional<std::size_t> Symbols::index_of(std::string_view name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return i;
    return std::nullopt;
}

void require_same_symbols(const SymbolsPtr& a, const SymbolsPtr& b) {
    if (!same_symbols(a, b))
        throw DimensionError("operands use different variable sets");
}

}  // namespace liedegen
