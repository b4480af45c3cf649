#include "hilbcone/expr.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace hilbcone {

namespace {

Vec unit(std::size_t n, std::size_t i) {
  Vec v(n, Rational(0));
  v[i] = 1;
  return v;
}

bool is_label_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_label_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

}  // namespace

ExprContext::ExprContext(std::vector<std::string> basis_labels) : labels_(std::move(basis_labels)) {
  for (std::size_t i = 0; i < labels_.size(); ++i) aliases_.emplace_back(labels_[i], unit(labels_.size(), i));
}

ExprContext ExprContext::for_surface(const SurfaceLattice& s, bool with_b) {
  std::vector<std::string> labels = s.basis_labels();
  if (with_b) labels.push_back("B");
  ExprContext ctx(labels);
  for (const auto& [name, cls] : s.derived_classes()) {
    Vec v = cls.coeffs;
    if (with_b) v.push_back(Rational(0));
    ctx.add_alias(name, v);
  }
  return ctx;
}

ExprContext ExprContext::free_labels() {
  ExprContext ctx;
  ctx.free_ = true;
  return ctx;
}

void ExprContext::add_alias(std::string label, Vec value) {
  if (value.size() != labels_.size()) throw std::invalid_argument("alias '" + label + "' has wrong size");
  for (auto& [name, v] : aliases_)
    if (name == label) {
      v = std::move(value);
      return;
    }
  aliases_.emplace_back(std::move(label), std::move(value));
}

Vec ExprContext::pad(const Vec& v) const {
  Vec out = v;
  out.resize(labels_.size(), Rational(0));
  return out;
}

Vec ExprContext::parse(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("empty class expression");
  if (s == "0") return Vec(labels_.size(), Rational(0));

  // Collect (coefficient, label) terms first so free labels can grow the basis.
  std::vector<std::pair<Rational, std::string>> terms;
  std::size_t i = 0;
  while (i < s.size()) {
    Rational sign(1);
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
    } else if (!terms.empty()) {
      throw std::invalid_argument("expected '+' or '-' in '" + s + "'");
    }
    const std::size_t num_start = i;
    while (i < s.size() && (std::isdigit(static_cast<unsigned char>(s[i])) || s[i] == '/')) ++i;
    Rational coeff(1);
    if (i > num_start) coeff = parse_rational(std::string_view(s).substr(num_start, i - num_start));
    if (i < s.size() && s[i] == '*') ++i;
    if (i >= s.size() || !is_label_start(s[i]))
      throw std::invalid_argument("expected a class label in '" + s + "'");
    const std::size_t label_start = i;
    while (i < s.size() && is_label_char(s[i])) ++i;
    terms.emplace_back(sign * coeff, s.substr(label_start, i - label_start));
  }

  for (const auto& [c, label] : terms) {
    const bool known = std::any_of(aliases_.begin(), aliases_.end(),
                                   [&](const auto& a) { return a.first == label; });
    if (known) continue;
    if (!free_) throw std::invalid_argument("unknown class label '" + label + "'");
    labels_.push_back(label);
    for (auto& a : aliases_) a.second.push_back(Rational(0));
    aliases_.emplace_back(label, unit(labels_.size(), labels_.size() - 1));
  }

  Vec out(labels_.size(), Rational(0));
  for (const auto& [c, label] : terms) {
    for (const auto& a : aliases_)
      if (a.first == label) {
        out = add(out, scale(c, a.second));
        break;
      }
  }
  return out;
}

std::vector<Vec> ExprContext::parse_list(std::string_view text) {
  std::vector<Vec> out;
  for (const auto& item : split_list(text)) out.push_back(parse(item));
  for (auto& v : out) v = pad(v);
  return out;
}

std::vector<std::string> split_list(std::string_view text) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    std::string item(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
    item.erase(0, item.find_first_not_of(" \t"));
    item.erase(item.find_last_not_of(" \t") + 1);
    if (item.empty()) throw std::invalid_argument("empty item in list '" + std::string(text) + "'");
    out.push_back(std::move(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace hilbcone
