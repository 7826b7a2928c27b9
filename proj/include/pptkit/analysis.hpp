#pragma once

#include "pptkit/coding.hpp"

#include <array>
#include <cstddef>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace pptkit {

namespace detail {

struct StringHash {
  using is_transparent = void;
  std::size_t operator()(std::string_view s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
  std::size_t operator()(const std::string& s) const noexcept {
    return std::hash<std::string_view>{}(s);
  }
};

}  // namespace detail

/// Positions (1-based, ascending) of every k-gram of a label sequence.
struct KGramIndex {
  std::size_t k = 0;
  std::unordered_map<std::string, std::vector<std::uint64_t>, detail::StringHash, std::equal_to<>>
      table;

  /// Occurrence positions of one gram; empty if absent.
  std::span<const std::uint64_t> find(std::string_view gram) const {
    auto it = table.find(gram);
    if (it == table.end()) return {};
    return it->second;
  }
};

inline KGramIndex build_index(std::span<const ClassLabel> labels, std::size_t k) {
  if (k < 1 || k > labels.size())
    throw ValidationError("gram size must satisfy 1 <= k <= sequence length");
  KGramIndex idx;
  idx.k = k;
  const std::string letters = labels_to_letters(labels);
  for (std::size_t i = 0; i + k <= letters.size(); ++i)
    idx.table[letters.substr(i, k)].push_back(i + 1);
  return idx;
}

/// Index over the first n labels of the default (hypotenuse-ordered) w.
inline KGramIndex build_index(std::uint64_t n, std::size_t k) {
  WSequence w = w_stream(n);
  return build_index(w.labels, k);
}

struct WindowStats {
  std::size_t k = 0;
  std::uint64_t windows = 0;
  std::uint64_t distinct = 0;

  std::uint64_t collisions() const { return windows - distinct; }
};

/// Outcome of the minimal-unique-window search: the smallest k at which
/// all windows of the sequence are pairwise distinct, plus per-k stats
/// for every k up to and including it.
struct UniquenessReport {
  std::uint64_t n = 0;
  std::size_t min_unique_k = 0;
  std::vector<WindowStats> histogram;
};

/// Smallest k with all n-k+1 windows distinct. Distinctness is monotone
/// in k (equal (k+1)-grams have equal k-gram prefixes), so the first hit
/// is the answer; k = n always succeeds.
inline UniquenessReport min_unique_window(std::span<const ClassLabel> labels) {
  if (labels.size() < 2) throw ValidationError("sequence too short: need at least 2 labels");
  const std::string letters = labels_to_letters(labels);
  UniquenessReport rep;
  rep.n = labels.size();
  for (std::size_t k = 1; k <= letters.size(); ++k) {
    std::unordered_set<std::string_view, detail::StringHash, std::equal_to<>> seen;
    const std::uint64_t windows = letters.size() - k + 1;
    seen.reserve(windows);
    for (std::size_t i = 0; i + k <= letters.size(); ++i)
      seen.insert(std::string_view(letters).substr(i, k));
    rep.histogram.push_back(WindowStats{k, windows, seen.size()});
    if (seen.size() == windows) {
      rep.min_unique_k = k;
      return rep;
    }
  }
  rep.min_unique_k = letters.size();
  return rep;
}

/// Same search over the first n labels of the default w.
inline UniquenessReport min_unique_window(std::uint64_t n) {
  WSequence w = w_stream(n);
  return min_unique_window(w.labels);
}

/// For each position i (1-based), the smallest k such that the k-gram at
/// i occurs nowhere else; 0 when no window starting at i is ever unique.
inline std::vector<std::size_t> per_position_unique_k(std::span<const ClassLabel> labels) {
  if (labels.empty()) throw ValidationError("sequence must be non-empty");
  const std::string letters = labels_to_letters(labels);
  const std::size_t n = letters.size();
  std::vector<std::size_t> out(n, 0);
  std::size_t unassigned = n;
  for (std::size_t k = 1; k <= n && unassigned > 0; ++k) {
    std::unordered_map<std::string_view, std::uint64_t, detail::StringHash, std::equal_to<>> count;
    for (std::size_t i = 0; i + k <= n; ++i)
      ++count[std::string_view(letters).substr(i, k)];
    bool any_extendable = false;
    for (std::size_t i = 0; i + k <= n; ++i) {
      if (out[i] != 0) continue;
      if (count[std::string_view(letters).substr(i, k)] == 1) {
        out[i] = k;
        --unassigned;
      } else {
        any_extendable = true;
      }
    }
    if (!any_extendable) break;  // remaining positions cannot grow their window
  }
  return out;
}

inline std::vector<std::size_t> per_position_unique_k(std::uint64_t n) {
  WSequence w = w_stream(n);
  return per_position_unique_k(w.labels);
}

/// All occurrence positions (1-based, ascending) of a letter gram.
inline std::vector<std::uint64_t> invert(std::string_view gram,
                                         std::span<const ClassLabel> labels) {
  if (gram.empty()) throw ValidationError("gram must be non-empty");
  for (char ch : gram) class_from_char(ch);  // validates the letters
  if (gram.size() > labels.size()) return {};
  KGramIndex idx = build_index(labels, gram.size());
  auto hits = idx.find(gram);
  return {hits.begin(), hits.end()};
}

inline std::vector<std::uint64_t> invert(std::string_view gram, std::uint64_t n) {
  WSequence w = w_stream(n);
  return invert(gram, w.labels);
}

inline std::array<std::uint64_t, 6> class_frequencies(std::span<const ClassLabel> labels) {
  std::array<std::uint64_t, 6> freq{};
  for (ClassLabel l : labels) ++freq[static_cast<std::size_t>(class_digit(l))];
  return freq;
}

inline std::array<std::uint64_t, 6> class_frequencies(std::uint64_t n) {
  WSequence w = w_stream(n);
  return class_frequencies(w.labels);
}

/// Label cache layout: magic "PPTW", one version byte (0x01), the label
/// count as a little-endian uint64, then one byte per label (digit 0..5).
inline constexpr char kCacheMagic[4] = {'P', 'P', 'T', 'W'};
inline constexpr unsigned char kCacheVersion = 0x01;

inline void write_label_cache(std::ostream& out, std::span<const ClassLabel> labels) {
  out.write(kCacheMagic, 4);
  out.put(static_cast<char>(kCacheVersion));
  std::uint64_t n = labels.size();
  char len[8];
  for (int i = 0; i < 8; ++i) len[i] = static_cast<char>((n >> (8 * i)) & 0xff);
  out.write(len, 8);
  for (ClassLabel l : labels) out.put(static_cast<char>(class_digit(l)));
  if (!out) throw ValidationError("cache write failed");
}

inline void write_label_cache(const std::string& path, std::span<const ClassLabel> labels) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw ValidationError("cannot open cache file for writing: " + path);
  write_label_cache(out, labels);
}

inline std::vector<ClassLabel> read_label_cache(std::istream& in) {
  char magic[4];
  if (!in.read(magic, 4) || std::string_view(magic, 4) != std::string_view(kCacheMagic, 4))
    throw ValidationError("bad cache file: wrong magic");
  int version = in.get();
  if (version == std::char_traits<char>::eof())
    throw ValidationError("bad cache file: truncated header");
  if (version != kCacheVersion)
    throw ValidationError("bad cache file: unsupported version " + std::to_string(version));
  char len[8];
  if (!in.read(len, 8)) throw ValidationError("bad cache file: truncated header");
  std::uint64_t n = 0;
  for (int i = 0; i < 8; ++i)
    n |= static_cast<std::uint64_t>(static_cast<unsigned char>(len[i])) << (8 * i);
  std::vector<ClassLabel> labels;
  labels.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    int byte = in.get();
    if (byte == std::char_traits<char>::eof())
      throw ValidationError("bad cache file: truncated payload");
    if (byte < 0 || byte > 5)
      throw ValidationError("bad cache file: label byte out of range at entry " +
                            std::to_string(i + 1));
    labels.push_back(class_from_digit(byte));
  }
  return labels;
}

inline std::vector<ClassLabel> read_label_cache(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError("cannot open cache file: " + path);
  return read_label_cache(in);
}

}  // namespace pptkit
