#include "tropseg/newick.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <set>
#include <string>

#include "tropseg/errors.hpp"
#include "tropseg/labels.hpp"

namespace tropseg {

namespace {

bool is_space(char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; }

bool is_label_char(char c) {
  switch (c) {
    case '(': case ')': case ',': case ':': case ';': case '[': case ']': case '\'':
      return false;
    default:
      return !is_space(c);
  }
}

class NewickParser {
 public:
  explicit NewickParser(std::string_view text) : text_(text) {}

  RootedTree parse() {
    skip_space();
    if (at_end()) fail("empty input");
    std::size_t root = subtree();
    tree_.set_root(root);
    skip_space();
    if (peek() == ':') branch_length(root);
    skip_space();
    if (at_end()) fail("missing ';'");
    if (peek() != ';') fail(peek() == ')' ? "unbalanced ')'" : "unexpected character");
    ++pos_;
    skip_space();
    if (!at_end()) fail("trailing characters after ';'");
    return std::move(tree_);
  }

 private:
  std::size_t subtree() {
    skip_space();
    if (peek() == '(') {
      std::size_t open = pos_;
      ++pos_;
      std::size_t node = tree_.add_node();
      std::size_t n_children = 0;
      for (;;) {
        std::size_t child = subtree();
        skip_space();
        if (peek() != ':') fail("missing branch length");
        branch_length(child);
        tree_.add_child(node, child);
        ++n_children;
        skip_space();
        if (at_end()) fail("unbalanced '(' opened at byte " + std::to_string(open));
        if (peek() == ',') {
          ++pos_;
          continue;
        }
        if (peek() == ')') {
          ++pos_;
          break;
        }
        fail("expected ',' or ')'");
      }
      if (n_children < 2) fail("internal node with a single child");
      skip_space();
      label();  // internal labels are dropped
      return node;
    }
    std::size_t start = pos_;
    std::string name = label();
    if (name.empty()) {
      if (at_end()) fail("unexpected end of input");
      if (peek() == ')') fail("unbalanced ')'");
      fail("empty leaf label");
    }
    if (!labels_.insert(name).second) fail_at("duplicate leaf label '" + name + "'", start);
    return tree_.add_node(std::move(name));
  }

  std::string label() {
    std::size_t start = pos_;
    while (!at_end() && is_label_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  void branch_length(std::size_t node) {
    ++pos_;  // ':'
    skip_space();
    std::size_t start = pos_;
    while (!at_end() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.' ||
                         text_[pos_] == '-' || text_[pos_] == '+' || text_[pos_] == 'e' || text_[pos_] == 'E'))
      ++pos_;
    if (start == pos_) fail_at("missing branch length", start);
    double value = 0.0;
    const char* first = text_.data() + start;
    const char* last = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr != last || !std::isfinite(value)) fail_at("malformed branch length", start);
    if (value < 0.0) fail_at("negative branch length", start);
    tree_.set_length(node, value);
  }

  void skip_space() {
    while (!at_end() && is_space(text_[pos_])) ++pos_;
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }
  [[noreturn]] void fail_at(const std::string& what, std::size_t at) const { throw ParseError(what, at); }

  std::string_view text_;
  std::size_t pos_ = 0;
  RootedTree tree_;
  std::set<std::string> labels_;
};

void write_number(std::string& out, double value, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, value);
  out += buf;
}

}  // namespace

RootedTree parse_newick(std::string_view text) { return NewickParser(text).parse(); }

std::string write_newick(const RootedTree& tree, int precision) {
  tree.validate();
  std::vector<std::string> min_label(tree.size());
  auto order = tree.preorder();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto& nd = tree.node(*it);
    if (nd.children.empty()) {
      min_label[*it] = nd.label;
      continue;
    }
    min_label[*it] = min_label[nd.children.front()];
    for (std::size_t c : nd.children)
      if (natural_less(min_label[c], min_label[*it])) min_label[*it] = min_label[c];
  }

  std::string out;
  // Iterative emission: (node, next child slot).
  std::vector<std::pair<std::size_t, std::size_t>> stack;
  std::vector<std::vector<std::size_t>> sorted(tree.size());
  auto emit_length = [&](std::size_t node) {
    const auto& len = tree.node(node).length;
    if (len) {
      out += ':';
      write_number(out, *len, precision);
    }
  };
  stack.emplace_back(tree.root(), 0);
  while (!stack.empty()) {
    auto& [node, slot] = stack.back();
    const auto& nd = tree.node(node);
    if (nd.children.empty()) {
      out += nd.label;
      emit_length(node);
      stack.pop_back();
      if (!stack.empty()) out += stack.back().second < tree.node(stack.back().first).children.size() ? "," : "";
      continue;
    }
    if (slot == 0) {
      sorted[node] = nd.children;
      std::sort(sorted[node].begin(), sorted[node].end(),
                [&](std::size_t a, std::size_t b) { return natural_less(min_label[a], min_label[b]); });
      out += '(';
    }
    if (slot < sorted[node].size()) {
      std::size_t child = sorted[node][slot++];
      stack.emplace_back(child, 0);
      continue;
    }
    out += ')';
    std::size_t done = node;
    stack.pop_back();
    emit_length(done);
    if (!stack.empty()) out += stack.back().second < tree.node(stack.back().first).children.size() ? "," : "";
  }
  out += ';';
  return out;
}

}  // namespace tropseg
