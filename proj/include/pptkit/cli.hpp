#pragma once

#include "pptkit/pptkit.hpp"

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace pptkit::cli {

namespace detail {

/// Tabular output: CSV and JSON share header names and stringified cell
/// values, so both formats round-trip the same records.
struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

inline std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += "\"\"";
    else out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

inline void write_csv(std::ostream& out, const Table& t) {
  for (std::size_t i = 0; i < t.headers.size(); ++i)
    out << (i ? "," : "") << csv_escape(t.headers[i]);
  out << '\n';
  for (const auto& row : t.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_escape(row[i]);
    out << '\n';
  }
}

inline void write_json(std::ostream& out, const Table& t) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& row : t.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t i = 0; i < row.size(); ++i) obj[t.headers[i]] = row[i];
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

inline void write_table(std::ostream& out, const Table& t, const std::string& format) {
  if (format == "json") write_json(out, t);
  else write_csv(out, t);
}

inline BigInt parse_bigint(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  if (start == text.size()) throw ValidationError("not an integer: '" + text + "'");
  for (std::size_t i = start; i < text.size(); ++i)
    if (text[i] < '0' || text[i] > '9')
      throw ValidationError("not an integer: '" + text + "'");
  return BigInt(text);
}

inline Ordering parse_order(const std::string& name) {
  if (name == "column") return Ordering::ByColumn;
  if (name == "row") return Ordering::ByRow;
  if (name == "diagonal") return Ordering::ByDiagonal;
  if (name == "hypotenuse") return Ordering::ByHypotenuse;
  throw ValidationError("unknown order: " + name);
}

inline std::string read_all_trim(std::istream& in) {
  std::string s{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  auto is_space = [](char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; };
  while (!s.empty() && is_space(s.back())) s.pop_back();
  std::size_t i = 0;
  while (i < s.size() && is_space(s[i])) ++i;
  return s.substr(i);
}

/// Labels for analyze/invert: serve from the cache file when it already
/// holds at least n labels, otherwise recompute and refresh the cache.
/// Cache files always hold the default hypotenuse-ordered sequence.
inline std::vector<ClassLabel> load_labels(std::uint64_t n, const std::string& cache_path) {
  if (n < 1) throw ValidationError("n must be >= 1");
  if (!cache_path.empty() && std::filesystem::exists(cache_path)) {
    std::vector<ClassLabel> cached = read_label_cache(cache_path);
    if (cached.size() >= n) {
      cached.resize(n);
      return cached;
    }
  }
  WSequence w = w_stream(n);
  if (!cache_path.empty()) write_label_cache(cache_path, w.labels);
  return std::move(w.labels);
}

inline std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur.push_back('"');
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        cur.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      fields.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  fields.push_back(std::move(cur));
  return fields;
}

inline std::string trim(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline Table st_table(Ordering order, const EnumLimits& limits) {
  Table t;
  t.headers = {"position", "s", "t", "a", "b", "c", "class", "digit"};
  StEnumerator en(order, limits);
  std::uint64_t pos = 1;
  while (auto e = en.next()) {
    ClassLabel l = classify(e->triple);
    t.rows.push_back({std::to_string(pos++), e->st.s().str(), e->st.t().str(),
                      e->triple.a().str(), e->triple.b().str(), e->triple.c().str(),
                      std::string(1, class_char(l)), std::to_string(class_digit(l))});
  }
  return t;
}

inline std::vector<std::string> tree_row(const TreePath& path, const Ppt& x) {
  StPair p = st_from_ppt(x);
  ClassLabel l = classify(x);
  return {std::to_string(path.size() + 1), path_string(path), x.a().str(), x.b().str(),
          x.c().str(),  p.s().str(),       p.t().str(),      std::string(1, class_char(l)),
          std::to_string(class_digit(l))};
}

}  // namespace detail

/// Runs one CLI invocation. `args` excludes the program name. Data goes
/// to `out`, diagnostics to `err`; `in` backs the stdin-reading commands.
/// Returns 0 on success, 1 on validation errors, 2 on usage errors.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
               std::istream& in = std::cin) {
  CLI::App app{"Primitive Pythagorean triple toolkit: tree and (s,t) generation, "
               "divisibility classes, base-6 coding, sequence analysis."};
  app.require_subcommand(1);

  const std::vector<std::string> orders{"column", "row", "diagonal", "hypotenuse"};

  auto* gen_tree = app.add_subcommand("gen-tree", "Walk the ternary tree rooted at (3,4,5)");
  std::size_t gt_depth = 3;
  std::string gt_path, gt_max_c, gt_format = "csv";
  gen_tree->add_option("--depth", gt_depth, "List generations 1..K (default 3)");
  gen_tree->add_option("--path", gt_path, "Single node at an L/M/R path from the root");
  gen_tree->add_option("--max-c", gt_max_c, "Stream all nodes with c <= bound, pre-order");
  gen_tree->add_option("--format", gt_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* gen_st = app.add_subcommand("gen-st", "Enumerate triples through the (s,t) array");
  std::string gs_order, gs_max_s, gs_max_c, gs_format = "csv";
  std::uint64_t gs_count = 0;
  gen_st->add_option("--order", gs_order, "Traversal order")
      ->required()
      ->check(CLI::IsMember(orders));
  gen_st->add_option("--max-s", gs_max_s, "Largest generator s");
  gen_st->add_option("--max-c", gs_max_c, "Largest hypotenuse");
  gen_st->add_option("--count", gs_count, "Maximum number of entries");
  gen_st->add_option("--format", gs_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* classify_cmd = app.add_subcommand("classify", "Divisibility class of a triple");
  std::vector<std::string> cl_xyz;
  bool cl_profile = false;
  std::string cl_csv, cl_format = "csv";
  classify_cmd->add_option("xyz", cl_xyz, "Triple components in any leg order")->expected(-1);
  classify_cmd->add_flag("--profile", cl_profile, "Also print the 3/4/5 divisibility profile");
  classify_cmd->add_option("--csv", cl_csv, "Batch-classify a CSV file of triples");
  classify_cmd->add_option("--format", cl_format, "Batch output format")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* w_seq = app.add_subcommand("w-seq", "Class-label sequence of ordered triples");
  std::uint64_t ws_count = 0;
  bool ws_digits = false;
  std::string ws_order = "hypotenuse", ws_format = "plain";
  w_seq->add_option("--count", ws_count, "Number of labels")->required();
  w_seq->add_flag("--digits", ws_digits, "Print digits 0-5 instead of letters A-F");
  w_seq->add_option("--order", ws_order, "Triple ordering")->check(CLI::IsMember(orders));
  w_seq->add_option("--format", ws_format, "Output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}));

  auto* encode_cmd = app.add_subcommand("encode", "Text to class-label stream");
  std::string en_text, en_alphabet;
  encode_cmd->add_option("--text", en_text, "Message text")->required();
  encode_cmd->add_option("--alphabet", en_alphabet, "Alphabet table file (36 lines, index<TAB>symbol)");

  auto* decode_cmd = app.add_subcommand("decode", "Class-label stream back to text");
  std::string de_text, de_alphabet;
  decode_cmd->add_option("--text", de_text, "Label letters A-F (default: read standard input)");
  decode_cmd->add_option("--alphabet", de_alphabet, "Alphabet table file (36 lines, index<TAB>symbol)");

  auto* crypt_cmd = app.add_subcommand("crypt", "Additive base-6 keystream cipher");
  std::uint64_t cr_key = 0;
  std::string cr_mode, cr_text;
  crypt_cmd->add_option("--key", cr_key, "Start index into the label sequence (>= 1)")->required();
  crypt_cmd->add_option("--mode", cr_mode, "enc or dec")
      ->required()
      ->check(CLI::IsMember({"enc", "dec"}));
  crypt_cmd->add_option("--text", cr_text, "Base-6 digit string (default: read standard input)");

  auto* analyze_cmd = app.add_subcommand("analyze", "Uniqueness analysis of the label sequence");
  std::uint64_t an_n = 0;
  std::size_t an_k = 0;
  bool an_per_position = false;
  std::string an_cache, an_format = "csv";
  analyze_cmd->add_option("--n", an_n, "Prefix length of the label sequence")->required();
  analyze_cmd->add_option("--k", an_k, "Dump the k-gram index instead of the window report");
  analyze_cmd->add_flag("--per-position", an_per_position,
                        "Smallest unique window length at each position");
  analyze_cmd->add_option("--cache", an_cache, "Label cache file (read if fresh, else rewritten)");
  analyze_cmd->add_option("--format", an_format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}));

  auto* invert_cmd = app.add_subcommand("invert", "Start positions of a gram in the sequence");
  std::string iv_gram, iv_cache;
  std::uint64_t iv_n = 0;
  invert_cmd->add_option("--gram", iv_gram, "Label letters A-F")->required();
  invert_cmd->add_option("--n", iv_n, "Prefix length of the label sequence")->required();
  invert_cmd->add_option("--cache", iv_cache, "Label cache file (read if fresh, else rewritten)");

  auto* theta_cmd = app.add_subcommand("theta", "Count generator pairs with s <= n");
  std::uint64_t th_n = 0;
  theta_cmd->add_option("n", th_n, "Odd bound >= 3")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen_tree->parsed()) {
      if (gen_tree->count("--depth") && gt_depth < 1)
        throw ValidationError("depth must be >= 1");
      detail::Table t;
      t.headers = {"generation", "path", "a", "b", "c", "s", "t", "class", "digit"};
      if (!gt_path.empty()) {
        TreePath path = parse_path(gt_path);
        t.rows.push_back(detail::tree_row(path, node_at(path)));
      } else if (!gt_max_c.empty()) {
        BigInt bound = detail::parse_bigint(gt_max_c);
        std::size_t depth_bound =
            gen_tree->count("--depth") ? gt_depth - 1 : kUnboundedDepth;
        TreeWalker walker(depth_bound, bound);
        while (auto node = walker.next()) t.rows.push_back(detail::tree_row(node->path, node->triple));
      } else {
        if (gt_depth < 1) throw ValidationError("depth must be >= 1");
        std::vector<TreeWalker::Node> level;
        level.push_back({TreePath{}, tree_root()});
        for (std::size_t k = 1; k <= gt_depth; ++k) {
          for (const auto& node : level) t.rows.push_back(detail::tree_row(node.path, node.triple));
          if (k == gt_depth) break;
          std::vector<TreeWalker::Node> next_level;
          next_level.reserve(level.size() * 3);
          for (const auto& node : level) {
            auto children = matrix_children(node.triple);
            for (int i = 0; i < 3; ++i) {
              TreePath child_path = node.path;
              child_path.push_back(static_cast<Step>(i));
              next_level.push_back({std::move(child_path), std::move(children[i])});
            }
          }
          level = std::move(next_level);
        }
      }
      detail::write_table(out, t, gt_format);
      return 0;
    }

    if (gen_st->parsed()) {
      EnumLimits lim;
      if (!gs_max_s.empty()) lim.max_s = detail::parse_bigint(gs_max_s);
      if (!gs_max_c.empty()) lim.max_c = detail::parse_bigint(gs_max_c);
      if (gen_st->count("--count")) lim.max_count = gs_count;
      detail::Table t = detail::st_table(detail::parse_order(gs_order), lim);
      detail::write_table(out, t, gs_format);
      return 0;
    }

    if (classify_cmd->parsed()) {
      if (!cl_csv.empty()) {
        if (!cl_xyz.empty())
          throw ValidationError("give either three components or --csv, not both");
        std::ifstream file(cl_csv);
        if (!file) throw ValidationError("cannot open CSV file: " + cl_csv);
        detail::Table t;
        t.headers = {"x", "y", "z", "status", "class", "digit"};
        std::string line;
        std::size_t lineno = 0;
        while (std::getline(file, line)) {
          ++lineno;
          std::string stripped = detail::trim(line);
          if (stripped.empty()) continue;
          auto fields = detail::split_csv_line(stripped);
          if (lineno == 1 && !fields.empty() &&
              fields[0].find_first_not_of("0123456789+- \t") != std::string::npos)
            continue;  // header row
          if (fields.size() != 3)
            throw ValidationError("CSV line " + std::to_string(lineno) +
                                  ": expected 3 fields, got " + std::to_string(fields.size()));
          BigInt x, y, z;
          try {
            x = detail::parse_bigint(detail::trim(fields[0]));
            y = detail::parse_bigint(detail::trim(fields[1]));
            z = detail::parse_bigint(detail::trim(fields[2]));
          } catch (const ValidationError& e) {
            throw ValidationError("CSV line " + std::to_string(lineno) + ": " + e.what());
          }
          std::string status, cls, digit;
          try {
            TripleKind kind = validate_triple(x, y, z);
            status = to_string(kind);
            if (kind == TripleKind::Primitive) {
              ClassLabel l = classify(canonical_ppt(x, y, z));
              cls = class_char(l);
              digit = std::to_string(class_digit(l));
            }
          } catch (const ValidationError&) {
            status = "invalid";
          }
          t.rows.push_back({x.str(), y.str(), z.str(), status, cls, digit});
        }
        detail::write_table(out, t, cl_format);
        return 0;
      }
      if (cl_xyz.size() != 3) {
        err << "error: classify needs three components or --csv FILE\n";
        return 2;
      }
      BigInt x = detail::parse_bigint(cl_xyz[0]);
      BigInt y = detail::parse_bigint(cl_xyz[1]);
      BigInt z = detail::parse_bigint(cl_xyz[2]);
      TripleKind kind = validate_triple(x, y, z);
      if (kind != TripleKind::Primitive)
        throw ValidationError("not a primitive Pythagorean triple: " + std::string(to_string(kind)));
      Ppt p = canonical_ppt(x, y, z);
      ClassLabel l = classify(p);
      out << class_char(l);
      if (cl_profile) {
        DivisibilityProfile pr = profile(p);
        out << " div3=" << component_char(pr.div3) << " div4=b div5=" << component_char(pr.div5);
      }
      out << '\n';
      return 0;
    }

    if (w_seq->parsed()) {
      if (ws_count < 1) throw ValidationError("label count must be >= 1");
      Ordering order = detail::parse_order(ws_order);
      if (ws_format == "plain") {
        WSequence w = w_stream(ws_count, order);
        out << (ws_digits ? digits(w) : w.letters()) << '\n';
      } else {
        detail::Table t = detail::st_table(order, EnumLimits{.max_count = ws_count});
        detail::write_table(out, t, ws_format);
      }
      return 0;
    }

    if (encode_cmd->parsed()) {
      Alphabet36 alpha =
          en_alphabet.empty() ? Alphabet36::canonical() : Alphabet36::from_file(en_alphabet);
      out << labels_to_letters(encode_text(en_text, alpha)) << '\n';
      return 0;
    }

    if (decode_cmd->parsed()) {
      Alphabet36 alpha =
          de_alphabet.empty() ? Alphabet36::canonical() : Alphabet36::from_file(de_alphabet);
      std::string text = decode_cmd->count("--text") ? de_text : detail::read_all_trim(in);
      out << decode_text(labels_from_letters(text), alpha) << '\n';
      return 0;
    }

    if (crypt_cmd->parsed()) {
      std::string text = crypt_cmd->count("--text") ? cr_text : detail::read_all_trim(in);
      std::string result = cr_mode == "enc" ? keystream_encrypt(text, cr_key)
                                            : keystream_decrypt(text, cr_key);
      out << result << '\n';
      return 0;
    }

    if (analyze_cmd->parsed()) {
      if (an_k != 0 && an_per_position)
        throw ValidationError("choose one of --k or --per-position");
      std::vector<ClassLabel> labels = detail::load_labels(an_n, an_cache);
      if (an_k != 0) {
        KGramIndex idx = build_index(labels, an_k);
        std::map<std::string, std::vector<std::uint64_t>> sorted(idx.table.begin(),
                                                                 idx.table.end());
        detail::Table t;
        t.headers = {"gram", "count", "positions"};
        for (const auto& [gram, positions] : sorted) {
          std::string joined;
          for (std::size_t i = 0; i < positions.size(); ++i) {
            if (i) joined.push_back(' ');
            joined += std::to_string(positions[i]);
          }
          t.rows.push_back({gram, std::to_string(positions.size()), joined});
        }
        detail::write_table(out, t, an_format);
      } else if (an_per_position) {
        std::vector<std::size_t> ks = per_position_unique_k(labels);
        detail::Table t;
        t.headers = {"position", "min_k"};
        for (std::size_t i = 0; i < ks.size(); ++i)
          t.rows.push_back({std::to_string(i + 1), std::to_string(ks[i])});
        detail::write_table(out, t, an_format);
      } else {
        UniquenessReport rep = min_unique_window(labels);
        if (an_format == "json") {
          nlohmann::ordered_json histogram = nlohmann::ordered_json::array();
          for (const WindowStats& ws : rep.histogram)
            histogram.push_back({{"k", std::to_string(ws.k)},
                                 {"windows", std::to_string(ws.windows)},
                                 {"distinct", std::to_string(ws.distinct)},
                                 {"collisions", std::to_string(ws.collisions())}});
          nlohmann::ordered_json obj{{"n", std::to_string(rep.n)},
                                     {"i_min", std::to_string(rep.min_unique_k)},
                                     {"histogram", std::move(histogram)}};
          out << obj.dump(2) << '\n';
        } else {
          detail::Table t;
          t.headers = {"k", "windows", "distinct", "collisions"};
          for (const WindowStats& ws : rep.histogram)
            t.rows.push_back({std::to_string(ws.k), std::to_string(ws.windows),
                              std::to_string(ws.distinct), std::to_string(ws.collisions())});
          detail::write_csv(out, t);
        }
      }
      return 0;
    }

    if (invert_cmd->parsed()) {
      for (char& ch : iv_gram)
        if (ch >= 'a' && ch <= 'f') ch = static_cast<char>(ch - 'a' + 'A');
      std::vector<ClassLabel> labels = detail::load_labels(iv_n, iv_cache);
      for (std::uint64_t pos : invert(iv_gram, labels)) out << pos << '\n';
      return 0;
    }

    if (theta_cmd->parsed()) {
      out << theta(th_n) << '\n';
      return 0;
    }
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return 1;
  }

  err << "error: no subcommand\n";
  return 2;
}

}  // namespace pptkit::cli
