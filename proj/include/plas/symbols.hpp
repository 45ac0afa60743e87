#ifndef PLAS_SYMBOLS_HPP
#define PLAS_SYMBOLS_HPP

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "plas/errors.hpp"

namespace plas {

inline bool is_valid_symbol_name(std::string_view name) {
  if (name.empty()) return false;
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (!alpha(name.front())) return false;
  for (char c : name.substr(1))
    if (!alpha(c) && !digit(c) && c != '_') return false;
  return true;
}

/// Ordered list of symbol names shared by all polynomials of one computation.
///
/// Two contexts are compatible when they list the same names in the same
/// order. Variable order is also the graded-lex variable order.
class SymbolContext {
 public:
  SymbolContext() : data_(std::make_shared<Data>()) {}

  explicit SymbolContext(std::vector<std::string> names) {
    auto data = std::make_shared<Data>();
    for (auto& n : names) {
      if (!is_valid_symbol_name(n)) throw Error("invalid symbol name '" + n + "'");
      if (data->index.count(n)) throw Error("duplicate symbol '" + n + "'");
      data->index.emplace(n, data->names.size());
      data->names.push_back(std::move(n));
    }
    data_ = std::move(data);
  }

  /// Parameters first, then x1..xn, y1..yn, z1..zn.
  static SymbolContext standard(const std::vector<std::string>& params, std::size_t dim) {
    std::vector<std::string> names(params);
    for (const char* prefix : {"x", "y", "z"})
      for (std::size_t i = 1; i <= dim; ++i) names.push_back(prefix + std::to_string(i));
    return SymbolContext(std::move(names));
  }

  std::size_t size() const { return data_->names.size(); }
  const std::vector<std::string>& names() const { return data_->names; }
  const std::string& name(std::size_t i) const { return data_->names.at(i); }

  std::optional<std::size_t> find(std::string_view name) const {
    auto it = data_->index.find(std::string(name));
    if (it == data_->index.end()) return std::nullopt;
    return it->second;
  }
  bool contains(std::string_view name) const { return find(name).has_value(); }

  std::size_t index(std::string_view name) const {
    auto i = find(name);
    if (!i) throw UnboundSymbolError(std::string(name));
    return *i;
  }

  /// New context with extra names appended.
  SymbolContext extended(const std::vector<std::string>& extra) const {
    std::vector<std::string> names(data_->names);
    names.insert(names.end(), extra.begin(), extra.end());
    return SymbolContext(std::move(names));
  }

  /// A name starting with `stem` that is not yet used.
  std::string fresh_name(const std::string& stem) const {
    if (!contains(stem)) return stem;
    for (int i = 0;; ++i) {
      std::string candidate = stem + "_" + std::to_string(i);
      if (!contains(candidate)) return candidate;
    }
  }

  friend bool operator==(const SymbolContext& a, const SymbolContext& b) {
    return a.data_ == b.data_ || a.data_->names == b.data_->names;
  }

 private:
  struct Data {
    std::vector<std::string> names;
    std::unordered_map<std::string, std::size_t> index;
  };
  std::shared_ptr<const Data> data_;
};

inline void require_same_context(const SymbolContext& a, const SymbolContext& b) {
  if (!(a == b)) throw ContextError("operands belong to different symbol contexts");
}

}  // namespace plas

#endif  // PLAS_SYMBOLS_HPP
