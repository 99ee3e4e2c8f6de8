#ifndef UCLIDMINI_SORT_H
#define UCLIDMINI_SORT_H

#include <memory>
#include <string>
#include <vector>

namespace uclidmini {

/**
 * A solver-level sort. Immutable value type; structural equality.
 * Enum sorts carry their variant list so that consumers (the evaluator,
 * the model parser) need no separate declaration table.
 */
class Sort
{
 public:
  enum class Kind
  {
    None,  // unannotated
    Bool,
    Int,
    Real,
    BitVec,
    Array,
    Uninterp,
    Enum,
  };

  Sort() = default;

  static Sort boolSort();
  static Sort intSort();
  static Sort realSort();
  static Sort bitvecSort(int width);
  static Sort arraySort(Sort index, Sort elem);
  static Sort uninterpSort(const std::string& name);
  static Sort enumSort(const std::string& name,
                       std::vector<std::string> variants);

  Kind kind() const { return d_impl ? d_impl->kind : Kind::None; }
  bool isNone() const { return kind() == Kind::None; }
  bool isBool() const { return kind() == Kind::Bool; }
  bool isInt() const { return kind() == Kind::Int; }
  bool isReal() const { return kind() == Kind::Real; }
  bool isBitvec() const { return kind() == Kind::BitVec; }
  bool isArray() const { return kind() == Kind::Array; }
  bool isUninterp() const { return kind() == Kind::Uninterp; }
  bool isEnum() const { return kind() == Kind::Enum; }
  bool isNumeric() const { return isInt() || isReal() || isBitvec(); }

  int bvWidth() const { return d_impl->width; }
  const Sort& arrayIndex() const { return d_impl->index; }
  const Sort& arrayElem() const { return d_impl->elem; }
  const std::string& name() const { return d_impl->name; }
  const std::vector<std::string>& enumVariants() const
  {
    return d_impl->variants;
  }

  bool operator==(const Sort& o) const;
  bool operator!=(const Sort& o) const { return !(*this == o); }

  /** Canonical text, e.g. "integer", "bv8", "[integer]boolean". */
  std::string str() const;

 private:
  struct Impl
  {
    Kind kind = Kind::None;
    int width = 0;
    Sort index;
    Sort elem;
    std::string name;
    std::vector<std::string> variants;
  };
  std::shared_ptr<const Impl> d_impl;
};

}  // namespace uclidmini

#endif
