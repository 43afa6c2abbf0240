#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

namespace vocheck {

// Semantic type of a declared name. All denotations are finite sets of
// values; this is what makes exhaustive checking possible.
struct SemanticType {
  enum class Kind { Bool, IntRange, Enum, Func };
  Kind kind = Kind::Bool;
  long long lo = 0, hi = 0;          // IntRange
  std::string enum_set;              // Enum
  std::shared_ptr<SemanticType> dom, cod;  // Func
  bool total = true;                 // Func

  static SemanticType boolean();
  static SemanticType int_range(long long lo, long long hi);
  static SemanticType enumeration(std::string set_name);
  static SemanticType func(SemanticType dom, SemanticType cod, bool total);

  std::string to_string() const;
  bool operator==(const SemanticType& o) const;
};

// Runtime value. Enum elements carry their declaration index so ordering
// and canonical forms do not depend on spelling.
struct Value {
  enum class Kind { Bool, Int, Enum, Set, Map };
  Kind kind = Kind::Bool;
  bool b = false;
  long long i = 0;
  std::string enum_set;
  std::string enum_elem;
  int enum_index = 0;
  std::vector<Value> set_elems;                    // sorted, unique
  std::vector<std::pair<Value, Value>> map_pairs;  // sorted by key, keys unique

  static Value boolean(bool v);
  static Value integer(long long v);
  static Value enum_elem_v(std::string set, std::string elem, int index);
  static Value set(std::vector<Value> elems);                      // canonicalizes
  static Value map(std::vector<std::pair<Value, Value>> pairs);    // canonicalizes

  // Total order over all values; values of different kinds are ordered by
  // kind rank. Equality is canonical-form equality.
  int compare(const Value& o) const;
  bool operator==(const Value& o) const { return compare(o) == 0; }
  bool operator!=(const Value& o) const { return compare(o) != 0; }
  bool operator<(const Value& o) const { return compare(o) < 0; }

  bool contains(const Value& elem) const;              // Set membership
  const Value* map_lookup(const Value& key) const;     // Map application, null if absent

  std::string to_string() const;
};

// Enumeration support: set name -> ordered element names. Filled by the
// project resolver, consumed by type denotation and deferred constants.
using EnumTable = std::map<std::string, std::vector<std::string>>;

// All values of a finite type, in canonical order. Throws std::runtime_error
// if the type references an unknown enum set.
std::vector<Value> denote_type(const SemanticType& t, const EnumTable& enums);

// |denote_type| without materializing; clamps at `cap` (returns cap+1 when larger).
unsigned long long type_cardinality(const SemanticType& t, const EnumTable& enums,
                                    unsigned long long cap);

// True if `v` is a member of the denotation of `t`.
bool value_in_type(const Value& v, const SemanticType& t, const EnumTable& enums);

}  // namespace vocheck
