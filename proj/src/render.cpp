#include "liefusion/render.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace liefusion {

Weight parse_weight(const std::string& s, int rank) {
  std::vector<std::int64_t> labels;
  std::string item;
  std::stringstream ss(s);
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t pos = 0;
      labels.push_back(std::stoll(item, &pos));
      if (pos != item.size()) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("bad weight label '" + item + "' in '" + s + "'");
    }
  }
  if (static_cast<int>(labels.size()) != rank)
    throw std::invalid_argument("expected " + std::to_string(rank) + " comma-separated labels in '" + s + "'");
  return Weight(labels);
}

std::string format_weight(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.rank(); ++i) {
    if (i) out += ",";
    out += std::to_string(w[i]);
  }
  return out + ")";
}

std::string format_weight_compact(const Weight& w) {
  bool compact = std::all_of(w.labels.begin(), w.labels.end(),
                             [](std::int64_t v) { return v >= 0 && v <= 9; });
  if (!compact) return format_weight(w);
  std::string out = "(";
  for (std::size_t i = 0; i < w.rank(); ++i) out += std::to_string(w[i]);
  return out + ")";
}

std::string format_ortho(const OrthoVec& v) {
  Int denom(1);
  for (const auto& c : v.coords) denom = boost::multiprecision::lcm(denom, denominator(c));
  std::string out;
  if (denom != 1) out += "1/" + denom.str();
  out += "[";
  for (std::size_t i = 0; i < v.dim(); ++i) {
    if (i) out += ",";
    out += to_string(Rat(v.coords[i] * denom));
  }
  return out + "]";
}

std::string format_decomposition(const RootSystem& R, const Decomposition& dec) {
  struct Item {
    Int dim;
    Weight w;
    Int mult;
  };
  std::vector<Item> items;
  for (const auto& [w, m] : dec.components) items.push_back({weyl_dim(R, w), w, m});
  std::sort(items.begin(), items.end(), [](const Item& a, const Item& b) {
    if (a.dim != b.dim) return a.dim < b.dim;
    return a.w < b.w;
  });
  std::string out;
  for (const auto& it : items) {
    if (!out.empty()) out += "+";
    if (it.mult != 1) out += to_string(it.mult);
    out += format_weight_compact(it.w);
  }
  return out;
}

}  // namespace liefusion
