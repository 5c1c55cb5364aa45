#include "artin/diagram.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <map>
#include <numeric>
#include <sstream>
#include <utility>

namespace artin {

  ////////////////////////////////////////////////////////////////////////
  // Label
  ////////////////////////////////////////////////////////////////////////

  Label Label::finite(std::uint32_t m) {
    if (m < 2) {
      throw DiagramError("label " + std::to_string(m) + " is below 2");
    }
    return Label(m);
  }

  std::uint32_t Label::value() const {
    if (is_infinite()) {
      throw std::logic_error("Label::value called on infinity");
    }
    return m_;
  }

  std::string Label::to_string() const {
    return is_infinite() ? std::string("inf") : std::to_string(m_);
  }

  ////////////////////////////////////////////////////////////////////////
  // Subset
  ////////////////////////////////////////////////////////////////////////

  Subset::Subset(std::vector<std::string> names) : names_(std::move(names)) {
    std::sort(names_.begin(), names_.end());
    names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
  }

  bool Subset::contains(std::string_view name) const {
    return std::binary_search(names_.begin(), names_.end(), name);
  }

  bool Subset::is_subset_of(Subset const& other) const {
    return std::includes(
        other.names_.begin(), other.names_.end(), names_.begin(), names_.end());
  }

  Subset Subset::united(Subset const& other) const {
    std::vector<std::string> out;
    std::set_union(names_.begin(),
                   names_.end(),
                   other.names_.begin(),
                   other.names_.end(),
                   std::back_inserter(out));
    return Subset(std::move(out));
  }

  Subset Subset::intersected(Subset const& other) const {
    std::vector<std::string> out;
    std::set_intersection(names_.begin(),
                          names_.end(),
                          other.names_.begin(),
                          other.names_.end(),
                          std::back_inserter(out));
    return Subset(std::move(out));
  }

  Subset Subset::without(Subset const& other) const {
    std::vector<std::string> out;
    std::set_difference(names_.begin(),
                        names_.end(),
                        other.names_.begin(),
                        other.names_.end(),
                        std::back_inserter(out));
    return Subset(std::move(out));
  }

  Subset Subset::with(std::string const& name) const {
    return united(Subset({name}));
  }

  std::string Subset::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (i != 0) {
        out += ',';
      }
      out += names_[i];
    }
    return out + "}";
  }

  bool graded_less(Subset const& a, Subset const& b) {
    if (a.size() != b.size()) {
      return a.size() < b.size();
    }
    return a < b;
  }

  ////////////////////////////////////////////////////////////////////////
  // CoxeterDiagram
  ////////////////////////////////////////////////////////////////////////

  CoxeterDiagram::CoxeterDiagram(std::vector<std::string> generators,
                                 Label                    fill)
      : generators_(std::move(generators)),
        labels_(generators_.size() * generators_.size(), fill) {
    if (generators_.size() > max_rank) {
      throw DiagramError("rank " + std::to_string(generators_.size())
                         + " exceeds the supported maximum of "
                         + std::to_string(max_rank));
    }
    std::vector<std::string> sorted = generators_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted[i].empty()) {
        throw DiagramError("empty generator name");
      }
      if (i > 0 && sorted[i] == sorted[i - 1]) {
        throw DiagramError("duplicate generator '" + sorted[i] + "'");
      }
    }
  }

  std::optional<std::size_t> CoxeterDiagram::index_of(
      std::string_view name) const {
    auto it = std::find(generators_.begin(), generators_.end(), name);
    if (it == generators_.end()) {
      return std::nullopt;
    }
    return static_cast<std::size_t>(it - generators_.begin());
  }

  std::size_t CoxeterDiagram::require_index(std::string_view name) const {
    auto i = index_of(name);
    if (!i) {
      throw DiagramError("unknown generator '" + std::string(name) + "'");
    }
    return *i;
  }

  Label CoxeterDiagram::label(std::size_t i, std::size_t j) const {
    if (i >= rank() || j >= rank() || i == j) {
      throw std::out_of_range("CoxeterDiagram::label: bad index pair");
    }
    return labels_[i * rank() + j];
  }

  Label CoxeterDiagram::label(std::string_view s, std::string_view t) const {
    return label(require_index(s), require_index(t));
  }

  void CoxeterDiagram::set_label(std::size_t i, std::size_t j, Label m) {
    if (i >= rank() || j >= rank() || i == j) {
      throw std::out_of_range("CoxeterDiagram::set_label: bad index pair");
    }
    labels_[i * rank() + j] = m;
    labels_[j * rank() + i] = m;
  }

  void CoxeterDiagram::set_label(std::string_view s,
                                 std::string_view t,
                                 Label            m) {
    set_label(require_index(s), require_index(t), m);
  }

  Subset CoxeterDiagram::all() const {
    return Subset(generators_);
  }

  GenMask CoxeterDiagram::mask_of(Subset const& subset) const {
    GenMask mask = 0;
    for (auto const& name : subset) {
      mask |= GenMask(1) << require_index(name);
    }
    return mask;
  }

  Subset CoxeterDiagram::subset_of(GenMask mask) const {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < rank(); ++i) {
      if (mask >> i & 1) {
        names.push_back(generators_[i]);
      }
    }
    return Subset(std::move(names));
  }

  GenMask CoxeterDiagram::full_mask() const noexcept {
    return rank() == 64 ? ~GenMask(0) : (GenMask(1) << rank()) - 1;
  }

  ////////////////////////////////////////////////////////////////////////
  // File format
  ////////////////////////////////////////////////////////////////////////

  namespace {
    std::vector<std::string> split_ws(std::string_view line) {
      std::vector<std::string> out;
      std::istringstream       in{std::string(line)};
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      return out;
    }

    std::string_view strip_comment(std::string_view line) {
      auto hash = line.find('#');
      if (hash != std::string_view::npos) {
        line = line.substr(0, hash);
      }
      return line;
    }

    Label parse_label(std::string const& tok, std::size_t lineno) {
      auto where = " (line " + std::to_string(lineno) + ")";
      if (tok == "inf") {
        return Label::infinity();
      }
      std::uint32_t value = 0;
      auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
      if (ec != std::errc() || ptr != tok.data() + tok.size()) {
        throw DiagramError("malformed label '" + tok + "'" + where);
      }
      if (value < 2) {
        throw DiagramError("label " + tok + " is below 2" + where);
      }
      return Label::finite(value);
    }

    bool has_prefix(std::string_view line, std::string_view key) {
      return line.substr(0, key.size()) == key;
    }
  }  // namespace

  CoxeterDiagram parse_diagram(std::string_view text) {
    std::vector<std::pair<std::size_t, std::string_view>> lines;
    std::size_t                                           lineno = 0;
    while (!text.empty()) {
      auto nl   = text.find('\n');
      auto line = text.substr(0, nl);
      text      = nl == std::string_view::npos ? std::string_view()
                                               : text.substr(nl + 1);
      ++lineno;
      if (!line.empty() && line.back() == '\r') {
        line.remove_suffix(1);
      }
      line = strip_comment(line);
      if (split_ws(line).empty()) {
        continue;
      }
      lines.emplace_back(lineno, line);
    }
    if (lines.empty()) {
      throw DiagramError("missing 'generators:' line");
    }

    auto first = lines.front().second;
    first.remove_prefix(std::min(first.find_first_not_of(" \t"), first.size()));
    if (!has_prefix(first, "generators:")) {
      throw DiagramError("first line must start with 'generators:'");
    }
    auto names = split_ws(first.substr(std::string_view("generators:").size()));
    if (names.empty()) {
      throw DiagramError("empty generator list");
    }

    std::size_t next = 1;
    Label       fill = Label::finite(2);
    if (next < lines.size()) {
      auto line = lines[next].second;
      line.remove_prefix(std::min(line.find_first_not_of(" \t"), line.size()));
      if (has_prefix(line, "default:")) {
        auto toks = split_ws(line.substr(std::string_view("default:").size()));
        if (toks.size() != 1 || (toks[0] != "2" && toks[0] != "inf")) {
          throw DiagramError("default must be '2' or 'inf' (line "
                             + std::to_string(lines[next].first) + ")");
        }
        fill = toks[0] == "inf" ? Label::infinity() : Label::finite(2);
        ++next;
      }
    }

    CoxeterDiagram d(names, fill);
    std::map<std::pair<std::size_t, std::size_t>, Label> seen;
    for (; next < lines.size(); ++next) {
      auto [no, line] = lines[next];
      auto where      = " (line " + std::to_string(no) + ")";
      auto toks       = split_ws(line);
      if (toks.size() != 3) {
        throw DiagramError("expected '<s> <t> <label>'" + where);
      }
      auto i = d.index_of(toks[0]);
      auto j = d.index_of(toks[1]);
      if (!i || !j) {
        throw DiagramError("unknown generator '" + (i ? toks[1] : toks[0])
                           + "'" + where);
      }
      if (*i == *j) {
        throw DiagramError("label on a single generator '" + toks[0] + "'"
                           + where);
      }
      Label m   = parse_label(toks[2], no);
      auto  key = std::minmax(*i, *j);
      auto  it  = seen.find(key);
      if (it != seen.end() && it->second != m) {
        throw DiagramError("conflicting labels for " + toks[0] + " " + toks[1]
                           + where);
      }
      seen.emplace(key, m);
      d.set_label(*i, *j, m);
    }
    return d;
  }

  std::string serialize(CoxeterDiagram const& d) {
    std::string out = "generators:";
    for (auto const& g : d.generators()) {
      out += ' ';
      out += g;
    }
    out += '\n';
    for (std::size_t i = 0; i < d.rank(); ++i) {
      for (std::size_t j = i + 1; j < d.rank(); ++j) {
        auto m = d.label(i, j);
        if (m != Label::finite(2)) {
          out += d.name(i) + ' ' + d.name(j) + ' ' + m.to_string() + '\n';
        }
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Structure
  ////////////////////////////////////////////////////////////////////////

  CoxeterDiagram induced(CoxeterDiagram const& d, GenMask mask) {
    std::vector<std::size_t> keep;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < d.rank(); ++i) {
      if (mask >> i & 1) {
        keep.push_back(i);
        names.push_back(d.name(i));
      }
    }
    CoxeterDiagram out(std::move(names));
    for (std::size_t a = 0; a < keep.size(); ++a) {
      for (std::size_t b = a + 1; b < keep.size(); ++b) {
        out.set_label(a, b, d.label(keep[a], keep[b]));
      }
    }
    return out;
  }

  CoxeterDiagram induced(CoxeterDiagram const& d, Subset const& subset) {
    return induced(d, d.mask_of(subset));
  }

  std::vector<GenMask> component_masks(CoxeterDiagram const& d,
                                       GenMask               within) {
    std::vector<GenMask> out;
    GenMask              left = within & d.full_mask();
    while (left != 0) {
      GenMask comp     = left & -left;
      GenMask frontier = comp;
      while (frontier != 0) {
        auto    i = static_cast<std::size_t>(std::countr_zero(frontier));
        GenMask add = 0;
        for (std::size_t j = 0; j < d.rank(); ++j) {
          if ((left >> j & 1) && !(comp >> j & 1) && d.label(i, j).is_edge()) {
            add |= GenMask(1) << j;
          }
        }
        frontier &= frontier - 1;
        frontier |= add;
        comp |= add;
      }
      out.push_back(comp);
      left &= ~comp;
    }
    return out;
  }

  std::vector<Subset> components(CoxeterDiagram const& d) {
    std::vector<Subset> out;
    for (auto mask : component_masks(d, d.full_mask())) {
      out.push_back(d.subset_of(mask));
    }
    std::sort(out.begin(), out.end(), [](Subset const& a, Subset const& b) {
      return a.names().front() < b.names().front();
    });
    return out;
  }

  bool is_small_type(CoxeterDiagram const& d) {
    for (std::size_t i = 0; i < d.rank(); ++i) {
      for (std::size_t j = i + 1; j < d.rank(); ++j) {
        auto m = d.label(i, j);
        if (m.is_infinite() || m.value() > 3) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_free_of_infinity(CoxeterDiagram const& d) {
    for (std::size_t i = 0; i < d.rank(); ++i) {
      for (std::size_t j = i + 1; j < d.rank(); ++j) {
        if (d.label(i, j).is_infinite()) {
          return false;
        }
      }
    }
    return true;
  }

  bool is_irreducible(CoxeterDiagram const& d) {
    return component_masks(d, d.full_mask()).size() == 1;
  }

  CoxeterDiagram disjoint_union(CoxeterDiagram const& a,
                                CoxeterDiagram const& b) {
    auto names = a.generators();
    names.insert(names.end(), b.generators().begin(), b.generators().end());
    CoxeterDiagram out(std::move(names));
    for (std::size_t i = 0; i < a.rank(); ++i) {
      for (std::size_t j = i + 1; j < a.rank(); ++j) {
        out.set_label(i, j, a.label(i, j));
      }
    }
    auto off = a.rank();
    for (std::size_t i = 0; i < b.rank(); ++i) {
      for (std::size_t j = i + 1; j < b.rank(); ++j) {
        out.set_label(off + i, off + j, b.label(i, j));
      }
    }
    return out;
  }

}  // namespace artin
