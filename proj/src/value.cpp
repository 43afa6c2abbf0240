#include "vocheck/value.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace vocheck {

SemanticType SemanticType::boolean() { return SemanticType{Kind::Bool, 0, 0, "", nullptr, nullptr, true}; }

SemanticType SemanticType::int_range(long long lo, long long hi) {
  SemanticType t;
  t.kind = Kind::IntRange;
  t.lo = lo;
  t.hi = hi;
  return t;
}

SemanticType SemanticType::enumeration(std::string set_name) {
  SemanticType t;
  t.kind = Kind::Enum;
  t.enum_set = std::move(set_name);
  return t;
}

SemanticType SemanticType::func(SemanticType dom, SemanticType cod, bool total) {
  SemanticType t;
  t.kind = Kind::Func;
  t.dom = std::make_shared<SemanticType>(std::move(dom));
  t.cod = std::make_shared<SemanticType>(std::move(cod));
  t.total = total;
  return t;
}

std::string SemanticType::to_string() const {
  switch (kind) {
    case Kind::Bool: return "BOOL";
    case Kind::IntRange: return std::to_string(lo) + ".." + std::to_string(hi);
    case Kind::Enum: return enum_set;
    case Kind::Func:
      return dom->to_string() + (total ? " --> " : " +-> ") + cod->to_string();
  }
  return "?";
}

bool SemanticType::operator==(const SemanticType& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::Bool: return true;
    case Kind::IntRange: return lo == o.lo && hi == o.hi;
    case Kind::Enum: return enum_set == o.enum_set;
    case Kind::Func: return total == o.total && *dom == *o.dom && *cod == *o.cod;
  }
  return false;
}

Value Value::boolean(bool v) {
  Value x;
  x.kind = Kind::Bool;
  x.b = v;
  return x;
}

Value Value::integer(long long v) {
  Value x;
  x.kind = Kind::Int;
  x.i = v;
  return x;
}

Value Value::enum_elem_v(std::string set, std::string elem, int index) {
  Value x;
  x.kind = Kind::Enum;
  x.enum_set = std::move(set);
  x.enum_elem = std::move(elem);
  x.enum_index = index;
  return x;
}

Value Value::set(std::vector<Value> elems) {
  Value x;
  x.kind = Kind::Set;
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end(),
                          [](const Value& a, const Value& b) { return a == b; }),
              elems.end());
  x.set_elems = std::move(elems);
  return x;
}

Value Value::map(std::vector<std::pair<Value, Value>> pairs) {
  Value x;
  x.kind = Kind::Map;
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  x.map_pairs = std::move(pairs);
  return x;
}

static int kind_rank(Value::Kind k) {
  switch (k) {
    case Value::Kind::Bool: return 0;
    case Value::Kind::Int: return 1;
    case Value::Kind::Enum: return 2;
    case Value::Kind::Set: return 3;
    case Value::Kind::Map: return 4;
  }
  return 5;
}

int Value::compare(const Value& o) const {
  if (kind != o.kind) return kind_rank(kind) < kind_rank(o.kind) ? -1 : 1;
  switch (kind) {
    case Kind::Bool:
      if (b == o.b) return 0;
      return b ? 1 : -1;
    case Kind::Int:
      if (i == o.i) return 0;
      return i < o.i ? -1 : 1;
    case Kind::Enum: {
      if (int c = enum_set.compare(o.enum_set)) return c < 0 ? -1 : 1;
      if (enum_index != o.enum_index) return enum_index < o.enum_index ? -1 : 1;
      return 0;
    }
    case Kind::Set: {
      size_t n = std::min(set_elems.size(), o.set_elems.size());
      for (size_t k = 0; k < n; ++k)
        if (int c = set_elems[k].compare(o.set_elems[k])) return c;
      if (set_elems.size() != o.set_elems.size())
        return set_elems.size() < o.set_elems.size() ? -1 : 1;
      return 0;
    }
    case Kind::Map: {
      size_t n = std::min(map_pairs.size(), o.map_pairs.size());
      for (size_t k = 0; k < n; ++k) {
        if (int c = map_pairs[k].first.compare(o.map_pairs[k].first)) return c;
        if (int c = map_pairs[k].second.compare(o.map_pairs[k].second)) return c;
      }
      if (map_pairs.size() != o.map_pairs.size())
        return map_pairs.size() < o.map_pairs.size() ? -1 : 1;
      return 0;
    }
  }
  return 0;
}

bool Value::contains(const Value& elem) const {
  return std::binary_search(set_elems.begin(), set_elems.end(), elem);
}

const Value* Value::map_lookup(const Value& key) const {
  auto it = std::lower_bound(map_pairs.begin(), map_pairs.end(), key,
                             [](const auto& p, const Value& k) { return p.first < k; });
  if (it != map_pairs.end() && it->first == key) return &it->second;
  return nullptr;
}

std::string Value::to_string() const {
  switch (kind) {
    case Kind::Bool: return b ? "TRUE" : "FALSE";
    case Kind::Int: return std::to_string(i);
    case Kind::Enum: return enum_elem;
    case Kind::Set: {
      std::string s = "{";
      for (size_t k = 0; k < set_elems.size(); ++k) {
        if (k) s += ",";
        s += set_elems[k].to_string();
      }
      return s + "}";
    }
    case Kind::Map: {
      std::string s = "{";
      for (size_t k = 0; k < map_pairs.size(); ++k) {
        if (k) s += ",";
        s += map_pairs[k].first.to_string() + "|->" + map_pairs[k].second.to_string();
      }
      return s + "}";
    }
  }
  return "?";
}

static const std::vector<std::string>& enum_elements(const std::string& set,
                                                     const EnumTable& enums) {
  auto it = enums.find(set);
  if (it == enums.end()) throw std::runtime_error("unknown enumerated set: " + set);
  return it->second;
}

std::vector<Value> denote_type(const SemanticType& t, const EnumTable& enums) {
  switch (t.kind) {
    case SemanticType::Kind::Bool:
      return {Value::boolean(false), Value::boolean(true)};
    case SemanticType::Kind::IntRange: {
      std::vector<Value> vs;
      for (long long v = t.lo; v <= t.hi; ++v) vs.push_back(Value::integer(v));
      return vs;
    }
    case SemanticType::Kind::Enum: {
      const auto& elems = enum_elements(t.enum_set, enums);
      std::vector<Value> vs;
      for (size_t i = 0; i < elems.size(); ++i)
        vs.push_back(Value::enum_elem_v(t.enum_set, elems[i], (int)i));
      return vs;
    }
    case SemanticType::Kind::Func: {
      std::vector<Value> dom = denote_type(*t.dom, enums);
      std::vector<Value> cod = denote_type(*t.cod, enums);
      // Per-key choices: each codomain value, plus "absent" for partial maps.
      std::vector<Value> out;
      std::vector<int> choice(dom.size(), 0);
      int options = (int)cod.size() + (t.total ? 0 : 1);
      if (options == 0) {
        if (dom.empty() || !t.total) out.push_back(Value::map({}));
        return out;
      }
      while (true) {
        std::vector<std::pair<Value, Value>> pairs;
        for (size_t k = 0; k < dom.size(); ++k) {
          int c = choice[k];
          if (!t.total && c == (int)cod.size()) continue;  // key absent
          pairs.emplace_back(dom[k], cod[c]);
        }
        out.push_back(Value::map(std::move(pairs)));
        size_t k = 0;
        for (; k < dom.size(); ++k) {
          if (++choice[k] < options) break;
          choice[k] = 0;
        }
        if (k == dom.size()) break;
      }
      std::sort(out.begin(), out.end());
      return out;
    }
  }
  return {};
}

unsigned long long type_cardinality(const SemanticType& t, const EnumTable& enums,
                                    unsigned long long cap) {
  switch (t.kind) {
    case SemanticType::Kind::Bool: return 2;
    case SemanticType::Kind::IntRange: {
      if (t.hi < t.lo) return 0;
      unsigned long long n = (unsigned long long)(t.hi - t.lo + 1);
      return n > cap ? cap + 1 : n;
    }
    case SemanticType::Kind::Enum:
      return enum_elements(t.enum_set, enums).size();
    case SemanticType::Kind::Func: {
      unsigned long long d = type_cardinality(*t.dom, enums, cap);
      unsigned long long c = type_cardinality(*t.cod, enums, cap);
      if (d > cap || c > cap) return cap + 1;
      unsigned long long options = c + (t.total ? 0 : 1);
      unsigned long long total = 1;
      for (unsigned long long k = 0; k < d; ++k) {
        if (options != 0 && total > cap / options) return cap + 1;
        total *= options;
      }
      return total;
    }
  }
  return 0;
}

bool value_in_type(const Value& v, const SemanticType& t, const EnumTable& enums) {
  switch (t.kind) {
    case SemanticType::Kind::Bool: return v.kind == Value::Kind::Bool;
    case SemanticType::Kind::IntRange:
      return v.kind == Value::Kind::Int && v.i >= t.lo && v.i <= t.hi;
    case SemanticType::Kind::Enum:
      return v.kind == Value::Kind::Enum && v.enum_set == t.enum_set;
    case SemanticType::Kind::Func: {
      if (v.kind != Value::Kind::Map) return false;
      for (const auto& [k, val] : v.map_pairs)
        if (!value_in_type(k, *t.dom, enums) || !value_in_type(val, *t.cod, enums)) return false;
      if (t.total) {
        auto dom = denote_type(*t.dom, enums);
        for (const auto& d : dom)
          if (!v.map_lookup(d)) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace vocheck
