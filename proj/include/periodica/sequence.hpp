#pragma once

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "periodica/error.hpp"

namespace periodica {

/// A mutation sequence split into slices, 0-based indices.
struct SlicedSequence {
  std::vector<std::vector<int>> slices;

  std::vector<int> flatten() const {
    std::vector<int> out;
    for (const auto& s : slices) out.insert(out.end(), s.begin(), s.end());
    return out;
  }

  /// Slice boundaries as starting offsets into flatten().
  std::vector<std::size_t> boundaries() const {
    std::vector<std::size_t> b;
    std::size_t pos = 0;
    for (const auto& s : slices) {
      b.push_back(pos);
      pos += s.size();
    }
    return b;
  }

  static SlicedSequence singletons(const std::vector<int>& seq) {
    SlicedSequence r;
    for (int k : seq) r.slices.push_back({k});
    return r;
  }
};

using NamedSequences = std::map<std::string, SlicedSequence>;

/// Parser for the sequence notation: `,` joins inside a slice, `|` starts a
/// new slice, `(...)^n` repeats with `|` between copies, names refer to
/// predefined sequences. Numbers are 1-based. Text without any `|` or name
/// is split into singleton slices.
class SequenceParser {
 public:
  SequenceParser(std::string_view text, const NamedSequences& names) : text_(text), names_(names) {}

  SlicedSequence parse() {
    pos_ = 0;
    skip_ws();
    if (pos_ == text_.size()) return {};  // blank text is the empty sequence
    SlicedSequence r = parse_list();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character");
    if (r.slices.empty() || r.flatten().empty()) fail("empty sequence");
    if (!used_bar_ && !used_name_) return SlicedSequence::singletons(r.flatten());
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw InvalidArgument("sequence '" + std::string(text_) + "': " + why + " at offset " + std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  static SlicedSequence join(SlicedSequence a, const SlicedSequence& b) {
    if (a.slices.empty()) return b;
    if (b.slices.empty()) return a;
    auto& last = a.slices.back();
    last.insert(last.end(), b.slices.front().begin(), b.slices.front().end());
    a.slices.insert(a.slices.end(), b.slices.begin() + 1, b.slices.end());
    return a;
  }

  static SlicedSequence bar(SlicedSequence a, const SlicedSequence& b) {
    a.slices.insert(a.slices.end(), b.slices.begin(), b.slices.end());
    return a;
  }

  SlicedSequence parse_list() {
    SlicedSequence acc = parse_item();
    while (true) {
      skip_ws();
      if (pos_ >= text_.size()) break;
      const char c = text_[pos_];
      if (c == ',') {
        ++pos_;
        acc = join(std::move(acc), parse_item());
      } else if (c == '|') {
        ++pos_;
        used_bar_ = true;
        acc = bar(std::move(acc), parse_item());
      } else {
        break;
      }
    }
    return acc;
  }

  SlicedSequence parse_item() {
    SlicedSequence a = parse_atom();
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == '^') {
      ++pos_;
      skip_ws();
      const long n = parse_number();
      if (n < 1) fail("repetition count must be positive");
      SlicedSequence r = a;
      for (long k = 1; k < n; ++k) r = bar(std::move(r), a);
      return r;
    }
    return a;
  }

  long parse_number() {
    const std::size_t start = pos_;
    long v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      v = v * 10 + (text_[pos_] - '0');
      if (v > 1'000'000) fail("number too large");
      ++pos_;
    }
    if (pos_ == start) fail("expected a number");
    return v;
  }

  SlicedSequence parse_atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      SlicedSequence inner = parse_list();
      skip_ws();
      if (pos_ >= text_.size() || text_[pos_] != ')') fail("missing ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const long v = parse_number();
      if (v < 1) fail("indices are 1-based");
      return SlicedSequence{{{static_cast<int>(v - 1)}}};
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_' || text_[pos_] == '+' || text_[pos_] == '-'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      auto it = names_.find(name);
      if (it == names_.end()) fail("unknown sequence name '" + name + "'");
      used_name_ = true;
      return it->second;
    }
    fail("unexpected character");
  }

  std::string_view text_;
  const NamedSequences& names_;
  std::size_t pos_ = 0;
  bool used_bar_ = false;
  bool used_name_ = false;
};

inline SlicedSequence parse_sequence(std::string_view text, const NamedSequences& names = {}) {
  return SequenceParser(text, names).parse();
}

}  // namespace periodica
