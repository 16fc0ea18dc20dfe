#pragma once

#include <memory>
#include <string>

namespace qpv {

enum class SortKind {
  Bool,
  Int,
  Perm,  // rational permission amount; Real at the SMT level
  Ref,
  Snap,  // opaque snapshot sort
  Pvm,   // partial value map sort
  Set,
  Domain,    // user-declared uninterpreted sort
  ValueMap,  // per-field value map; an unary function Ref -> field sort
};

/// A first-order sort. Value type; composite sorts share their element
/// representation.
class Sort {
 public:
  Sort() : kind_(SortKind::Bool) {}

  static Sort boolean() { return Sort(SortKind::Bool); }
  static Sort integer() { return Sort(SortKind::Int); }
  static Sort perm() { return Sort(SortKind::Perm); }
  static Sort ref() { return Sort(SortKind::Ref); }
  static Sort snap() { return Sort(SortKind::Snap); }
  static Sort pvm() { return Sort(SortKind::Pvm); }

  static Sort set(const Sort& elem) {
    Sort s(SortKind::Set);
    s.elem_ = std::make_shared<Sort>(elem);
    return s;
  }

  static Sort domain(std::string name) {
    Sort s(SortKind::Domain);
    s.name_ = std::move(name);
    return s;
  }

  /// The sort of a value map for field `field` holding values of `value`.
  static Sort value_map(std::string field, const Sort& value) {
    Sort s(SortKind::ValueMap);
    s.name_ = std::move(field);
    s.elem_ = std::make_shared<Sort>(value);
    return s;
  }

  SortKind kind() const { return kind_; }
  bool is(SortKind k) const { return kind_ == k; }

  /// Element sort of a Set, or value sort of a ValueMap.
  const Sort& elem() const { return *elem_; }
  /// Domain name or value-map field name.
  const std::string& name() const { return name_; }

  bool operator==(const Sort& o) const {
    if (kind_ != o.kind_) return false;
    if (name_ != o.name_) return false;
    if (!elem_ != !o.elem_) return false;
    return !elem_ || *elem_ == *o.elem_;
  }
  bool operator!=(const Sort& o) const { return !(*this == o); }

  std::string to_string() const;
  size_t hash() const;

 private:
  explicit Sort(SortKind k) : kind_(k) {}

  SortKind kind_;
  std::shared_ptr<const Sort> elem_;
  std::string name_;
};

}  // namespace qpv
