#pragma once

#include "pptkit/classify.hpp"
#include "pptkit/st_enum.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <fstream>
#include <istream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pptkit {

/// A prefix of the label sequence w: the class of every triple taken in
/// some enumeration order. Position i (0-based) labels the (i+1)-th triple.
struct WSequence {
  Ordering order;
  std::vector<ClassLabel> labels;

  std::string letters() const {
    std::string s;
    s.reserve(labels.size());
    for (ClassLabel l : labels) s.push_back(class_char(l));
    return s;
  }
};

/// First `count` labels of w under the given order.
inline WSequence w_stream(std::uint64_t count, Ordering order = Ordering::ByHypotenuse) {
  if (count < 1) throw ValidationError("label count must be >= 1");
  WSequence w{order, {}};
  w.labels.reserve(count);
  StEnumerator en(order, EnumLimits{.max_count = count});
  while (auto e = en.next()) w.labels.push_back(classify(e->triple));
  return w;
}

inline std::string digits(const WSequence& w) {
  std::string s;
  s.reserve(w.labels.size());
  for (ClassLabel l : w.labels) s.push_back(static_cast<char>('0' + class_digit(l)));
  return s;
}

inline std::string labels_to_letters(std::span<const ClassLabel> labels) {
  std::string s;
  s.reserve(labels.size());
  for (ClassLabel l : labels) s.push_back(class_char(l));
  return s;
}

inline std::vector<ClassLabel> labels_from_letters(std::string_view text) {
  std::vector<ClassLabel> out;
  out.reserve(text.size());
  for (char ch : text) out.push_back(class_from_char(ch));
  return out;
}

/// A 36-symbol alphabet mapping label pairs to text. Cell (p,q) holds the
/// symbol at index 6*digit(p) + digit(q). Symbols are byte strings; the
/// canonical table is single ASCII characters but files may carry longer
/// UTF-8 sequences.
class Alphabet36 {
 public:
  static const Alphabet36& canonical() {
    static const Alphabet36 table = make_canonical();
    return table;
  }

  /// Parses a 36-line "index<TAB>symbol" table. Indices 0..35 must each
  /// appear exactly once; symbols must be distinct and non-empty. CR from
  /// CRLF endings is stripped; other whitespace is part of the symbol.
  static Alphabet36 from_stream(std::istream& in) {
    Alphabet36 table;
    std::array<bool, 36> seen{};
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      auto tab = line.find('\t');
      if (tab == std::string::npos)
        throw ValidationError("alphabet line " + std::to_string(lineno) + ": missing tab");
      int idx = 0;
      try {
        std::size_t used = 0;
        idx = std::stoi(line.substr(0, tab), &used);
        if (used != tab) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw ValidationError("alphabet line " + std::to_string(lineno) + ": bad index field");
      }
      if (idx < 0 || idx > 35)
        throw ValidationError("alphabet line " + std::to_string(lineno) +
                              ": index out of range 0..35");
      if (seen[static_cast<std::size_t>(idx)])
        throw ValidationError("alphabet line " + std::to_string(lineno) + ": duplicate index " +
                              std::to_string(idx));
      std::string sym = line.substr(tab + 1);
      if (sym.empty())
        throw ValidationError("alphabet line " + std::to_string(lineno) + ": empty symbol");
      seen[static_cast<std::size_t>(idx)] = true;
      table.symbols_[static_cast<std::size_t>(idx)] = std::move(sym);
    }
    for (int i = 0; i < 36; ++i)
      if (!seen[static_cast<std::size_t>(i)])
        throw ValidationError("alphabet table: missing index " + std::to_string(i));
    for (int i = 0; i < 36; ++i)
      for (int j = i + 1; j < 36; ++j)
        if (table.symbols_[static_cast<std::size_t>(i)] ==
            table.symbols_[static_cast<std::size_t>(j)])
          throw ValidationError("alphabet table: duplicate symbol at indices " +
                                std::to_string(i) + " and " + std::to_string(j));
    return table;
  }

  static Alphabet36 from_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open alphabet file: " + path);
    return from_stream(in);
  }

  const std::string& symbol(int index) const { return symbols_.at(static_cast<std::size_t>(index)); }

  static int index_of_pair(ClassLabel p, ClassLabel q) {
    return 6 * class_digit(p) + class_digit(q);
  }

  static std::pair<ClassLabel, ClassLabel> pair_of(int index) {
    return {class_from_digit(index / 6), class_from_digit(index % 6)};
  }

  /// Longest symbol matching a prefix of text[pos..], or -1.
  int match_at(std::string_view text, std::size_t pos) const {
    int best = -1;
    std::size_t best_len = 0;
    for (int i = 0; i < 36; ++i) {
      const std::string& sym = symbols_[static_cast<std::size_t>(i)];
      if (sym.size() > best_len && text.substr(pos, sym.size()) == sym) {
        best = i;
        best_len = sym.size();
      }
    }
    return best;
  }

 private:
  std::array<std::string, 36> symbols_;

  static Alphabet36 make_canonical() {
    Alphabet36 t;
    for (int i = 0; i < 26; ++i)
      t.symbols_[static_cast<std::size_t>(i)] = std::string(1, static_cast<char>('A' + i));
    t.symbols_[26] = " ";
    const char rest[] = {'.', ',', '?', '!', ';', ':', '\'', '-', '"'};
    for (int i = 0; i < 9; ++i) t.symbols_[static_cast<std::size_t>(27 + i)] = std::string(1, rest[i]);
    return t;
  }
};

/// Text to label pairs: each symbol becomes the two labels of its cell.
/// ASCII letters are uppercased first; any unmatched byte aborts with its
/// value and 1-based position.
inline std::vector<ClassLabel> encode_text(std::string_view message,
                                           const Alphabet36& alpha = Alphabet36::canonical()) {
  std::string text(message);
  for (char& ch : text)
    if (ch >= 'a' && ch <= 'z') ch = static_cast<char>(ch - 'a' + 'A');
  std::vector<ClassLabel> out;
  out.reserve(2 * text.size());
  std::size_t pos = 0;
  while (pos < text.size()) {
    int idx = alpha.match_at(text, pos);
    if (idx < 0) {
      std::ostringstream msg;
      msg << "cannot encode character '" << text[pos] << "' at position " << (pos + 1);
      throw ValidationError(msg.str());
    }
    auto [p, q] = Alphabet36::pair_of(idx);
    out.push_back(p);
    out.push_back(q);
    pos += alpha.symbol(idx).size();
  }
  return out;
}

/// Label pairs back to text. An odd-length input has a dangling label and
/// is rejected as a framing error.
inline std::string decode_text(std::span<const ClassLabel> labels,
                               const Alphabet36& alpha = Alphabet36::canonical()) {
  if (labels.size() % 2 != 0)
    throw ValidationError("framing error: odd label count " + std::to_string(labels.size()));
  std::string out;
  for (std::size_t i = 0; i < labels.size(); i += 2)
    out += alpha.symbol(Alphabet36::index_of_pair(labels[i], labels[i + 1]));
  return out;
}

namespace detail {

inline int base6_digit(char ch) {
  if (ch < '0' || ch > '5')
    throw ValidationError(std::string("not a base-6 digit: '") + ch + "'");
  return ch - '0';
}

}  // namespace detail

/// Additive stream cipher over base-6 digit strings. The keystream is the
/// digit of w at positions key, key+1, ... (1-based); encryption adds it
/// mod 6, decryption subtracts.
inline std::string keystream_apply(std::string_view digits_in, std::uint64_t key, bool encrypt,
                                   std::span<const ClassLabel> w) {
  if (key < 1) throw ValidationError("key index must be >= 1");
  if (digits_in.empty()) return {};
  if (w.size() < key - 1 + digits_in.size())
    throw ValidationError("label sequence too short for key and message length");
  std::string out;
  out.reserve(digits_in.size());
  for (std::size_t i = 0; i < digits_in.size(); ++i) {
    int m = detail::base6_digit(digits_in[i]);
    int k = class_digit(w[key - 1 + i]);
    int r = encrypt ? (m + k) % 6 : (m - k + 6) % 6;
    out.push_back(static_cast<char>('0' + r));
  }
  return out;
}

inline std::string keystream_encrypt(std::string_view digits_in, std::uint64_t key,
                                     std::span<const ClassLabel> w) {
  return keystream_apply(digits_in, key, true, w);
}

inline std::string keystream_decrypt(std::string_view digits_in, std::uint64_t key,
                                     std::span<const ClassLabel> w) {
  return keystream_apply(digits_in, key, false, w);
}

inline std::string keystream_encrypt(std::string_view digits_in, std::uint64_t key,
                                     Ordering order = Ordering::ByHypotenuse) {
  if (key < 1) throw ValidationError("key index must be >= 1");
  if (digits_in.empty()) return {};
  WSequence w = w_stream(key - 1 + digits_in.size(), order);
  return keystream_apply(digits_in, key, true, w.labels);
}

inline std::string keystream_decrypt(std::string_view digits_in, std::uint64_t key,
                                     Ordering order = Ordering::ByHypotenuse) {
  if (key < 1) throw ValidationError("key index must be >= 1");
  if (digits_in.empty()) return {};
  WSequence w = w_stream(key - 1 + digits_in.size(), order);
  return keystream_apply(digits_in, key, false, w.labels);
}

}  // namespace pptkit
