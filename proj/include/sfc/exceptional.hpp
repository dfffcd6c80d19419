#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "sfc/exceptional_data.hpp"
#include "sfc/rational.hpp"

namespace sfc::exc {

struct ExMember {
  std::string label;
  int b = 0;
  bool in_family = true;
};

struct ExRecord {
  std::string group_type;  // E8, E7, E6, F4, G2
  std::string class_name;
  std::vector<ExMember> members;
  std::string a_tag, abar_tag;  // "1" or "S2".."S5"

  std::string serialize() const {
    std::string s = group_type + "|" + class_name + "|";
    for (size_t i = 0; i < members.size(); ++i) {
      if (i) s += ",";
      s += members[i].label + "(" + std::to_string(members[i].b) + "," +
           (members[i].in_family ? "1" : "0") + ")";
    }
    s += "|" + a_tag + "|" + abar_tag;
    return s;
  }
};

inline int symmetric_order(const std::string& tag) {
  if (tag == "1") return 1;
  if (tag == "S2") return 2;
  if (tag == "S3") return 6;
  if (tag == "S4") return 24;
  if (tag == "S5") return 120;
  throw error("exceptional: unknown group tag " + tag);
}

inline int irr_count(const std::string& tag) {
  if (tag == "1") return 1;
  if (tag == "S2") return 2;
  if (tag == "S3") return 3;
  if (tag == "S4") return 5;
  if (tag == "S5") return 7;
  throw error("exceptional: unknown group tag " + tag);
}

inline ExRecord parse_record(const std::string& line) {
  ExRecord r;
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == '|') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  fields.push_back(cur);
  if (fields.size() != 5) throw error("exceptional: malformed record: " + line);
  r.group_type = fields[0];
  r.class_name = fields[1];
  r.a_tag = fields[3];
  r.abar_tag = fields[4];
  // members: label(b,flag) separated by commas; labels never contain commas
  const std::string& ms = fields[2];
  size_t i = 0;
  while (i < ms.size()) {
    size_t open = ms.find('(', i);
    size_t close = ms.find(')', open);
    if (open == std::string::npos || close == std::string::npos)
      throw error("exceptional: malformed member list: " + ms);
    ExMember m;
    m.label = ms.substr(i, open - i);
    std::string inner = ms.substr(open + 1, close - open - 1);
    size_t comma = inner.find(',');
    m.b = std::stoi(inner.substr(0, comma));
    m.in_family = inner.substr(comma + 1) == "1";
    r.members.push_back(m);
    i = close + 1;
    if (i < ms.size() && ms[i] == ',') ++i;
  }
  if (r.members.empty()) throw error("exceptional: record without members");
  return r;
}

inline const std::vector<ExRecord>& all_records() {
  static const std::vector<ExRecord> recs = [] {
    std::vector<ExRecord> out;
    std::istringstream in(kExceptionalTable);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty()) continue;
      out.push_back(parse_record(line));
    }
    return out;
  }();
  return recs;
}

inline std::vector<ExRecord> records_of(const std::string& type) {
  std::vector<ExRecord> out;
  for (auto& r : all_records())
    if (r.group_type == type) out.push_back(r);
  if (out.empty()) throw error("exceptional: unknown type " + type);
  return out;
}

inline ExRecord lookup(const std::string& type, const std::string& class_name) {
  for (auto& r : all_records())
    if (r.group_type == type && r.class_name == class_name) return r;
  throw error("exceptional: unknown class " + type + "/" + class_name);
}

// Ordering convention for the irreducibles of the quotient S_n, as a list of
// names; G2 uses a two-element list for S3.
inline std::vector<std::string> quotient_irrep_order(const std::string& tag, bool g2) {
  if (tag == "1") return {"1"};
  if (tag == "S2") return {"1", "eps"};
  if (tag == "S3") return g2 ? std::vector<std::string>{"1", "r"}
                             : std::vector<std::string>{"1", "r", "eps"};
  if (tag == "S4") return {"1", "lambda1", "lambda2", "sigma"};
  if (tag == "S5") return {"1", "nu", "lambda1", "nuprime", "lambda2", "lambda3"};
  throw error("exceptional: unknown group tag " + tag);
}

struct Attached {
  ExMember member;
  std::string irrep;
};

inline std::vector<Attached> attach_irreps(const ExRecord& r) {
  auto order = quotient_irrep_order(r.abar_tag, r.group_type == "G2");
  std::vector<Attached> out;
  size_t k = 0;
  for (auto& m : r.members) {
    if (!m.in_family) continue;
    if (k >= order.size())
      throw error("exceptional: more family members than ordered irreducibles in " +
                  r.class_name);
    out.push_back({m, order[k++]});
  }
  return out;
}

struct ConsistencyItem {
  std::string class_name;
  bool first_member_unbracketed = true;
  bool first_b_minimal = true;      // not meaningful for F4 labels, skipped there
  bool abar_divides_a = true;
  bool family_fits_quotient = true;
  bool brackets_iff_proper_quotient = true;
  bool abar_is_symmetric = true;
  bool ok() const {
    return first_member_unbracketed && first_b_minimal && abar_divides_a &&
           family_fits_quotient && brackets_iff_proper_quotient && abar_is_symmetric;
  }
};

struct ConsistencyReport {
  std::vector<ConsistencyItem> items;
  int scanned = 0;
  bool ok() const {
    for (auto& i : items)
      if (!i.ok()) return false;
    return true;
  }
};

inline ConsistencyReport consistency(const std::string& type) {
  ConsistencyReport rep;
  for (auto& r : records_of(type)) {
    ConsistencyItem it;
    it.class_name = r.class_name;
    it.first_member_unbracketed = r.members.front().in_family;
    if (type != "F4") {
      // subscripts are b-invariants for the E types and G2; F4 subscripts are
      // the catalog indices of its notation and carry no order
      int minb = r.members.front().b;
      for (auto& m : r.members) minb = std::min(minb, m.b);
      it.first_b_minimal = r.members.front().b == minb;
    }
    try {
      it.abar_divides_a = symmetric_order(r.a_tag) % symmetric_order(r.abar_tag) == 0;
      int fam = 0;
      bool brackets = false;
      for (auto& m : r.members) {
        if (m.in_family) ++fam;
        else brackets = true;
      }
      int limit = (int)quotient_irrep_order(r.abar_tag, type == "G2").size();
      it.family_fits_quotient = fam <= irr_count(r.abar_tag) && fam <= limit;
      it.brackets_iff_proper_quotient = brackets == (r.a_tag != r.abar_tag);
    } catch (const error&) {
      it.abar_is_symmetric = false;
    }
    rep.items.push_back(it);
    ++rep.scanned;
  }
  return rep;
}

}  // namespace sfc::exc
