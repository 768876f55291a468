#include "defreg/ideal_types.hpp"

#include <algorithm>
#include <sstream>

namespace defreg {

namespace {

void append_set(std::ostringstream& out, const IndexSet& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i)
      out << ',';
    out << s[i];
  }
}

void append_family(std::ostringstream& out, const std::vector<IndexSet>& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (i)
      out << ';';
    append_set(out, family[i]);
  }
}

struct KeyVisitor {
  std::string operator()(const FacePrime& p) const {
    std::ostringstream out;
    out << "F:";
    append_set(out, p.vars);
    return out.str();
  }
  std::string operator()(const CliquePrime& p) const {
    std::ostringstream out;
    out << "C:" << p.n << "|";
    append_set(out, p.killed);
    out << "|";
    append_family(out, p.blocks);
    return out.str();
  }
  std::string operator()(const CliqueUnionIdeal& p) const {
    std::ostringstream out;
    out << "U:" << p.n << "|";
    append_set(out, p.killed);
    out << "|";
    append_family(out, p.cliques);
    return out.str();
  }
  std::string operator()(const AbstractLabel& p) const { return "A:" + p.label; }
};

} // namespace

std::size_t CliquePrime::height() const {
  std::size_t h = 2 * killed.size();
  for (const auto& b : blocks)
    h += b.size() - 1;
  return h;
}

std::size_t CliquePrime::dim() const { return (n - killed.size()) + blocks.size(); }

std::string canonical_key(const NodeRepr& repr) { return std::visit(KeyVisitor{}, repr); }

IndexSet make_index_set(std::vector<std::uint32_t> values) {
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

} // namespace defreg
