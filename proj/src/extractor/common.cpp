#include "common.hpp"

#include <algorithm>

#include "docsieve/text.hpp"

namespace docsieve::extract {

std::vector<TokenRange> nested_ranges(const std::vector<RawUnit>& units, std::size_t first,
                                      std::size_t last) {
  std::vector<TokenRange> out;
  for (const auto& u : units) {
    if (u.decl_first > first && u.last <= last) out.emplace_back(u.decl_first, u.last);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> block_doc_before(const TokenStream& ts, std::size_t first) {
  if (first == 0 || first == npos) return std::nullopt;
  const Token& c = ts[first - 1];
  if (c.kind != Tok::Comment) return std::nullopt;
  std::string_view tx = ts.text(first - 1);
  if (tx.substr(0, 3) != "/**" || tx == "/**/") return std::nullopt;
  int decl_line = ts[first].line;
  if (c.end_line != decl_line && c.end_line + 1 != decl_line) return std::nullopt;
  return std::string(tx);
}

std::optional<std::string> line_run_before(const TokenStream& ts, std::size_t first,
                                           const std::function<bool(std::string_view)>& keep) {
  if (first == 0 || first == npos) return std::nullopt;
  int want_line = ts[first].line - 1;
  std::size_t i = first;
  std::size_t run_first = npos, run_last = npos;
  while (i > 0) {
    std::size_t j = i - 1;
    const Token& c = ts[j];
    if (c.kind != Tok::Comment || c.line != want_line) break;
    std::string_view tx = ts.text(j);
    if (tx.substr(0, 2) != "//" || !keep(tx)) break;
    if (j > 0 && ts[j - 1].end_line >= c.line) break;  // trailing comment on a code line
    if (run_last == npos) run_last = j;
    run_first = j;
    --want_line;
    i = j;
  }
  if (run_first == npos) return std::nullopt;
  return std::string(ts.span(run_first, run_last));
}

std::vector<std::vector<std::size_t>> split_commas(const TokenStream& ts, std::size_t open,
                                                   bool angle) {
  std::vector<std::vector<std::size_t>> parts;
  std::size_t close = ts.partner(open);
  std::vector<std::size_t> cur;
  int angle_depth = 0;
  for (std::size_t i = open + 1; i < close; ++i) {
    if (ts[i].kind == Tok::Comment || ts[i].kind == Tok::Newline) continue;
    if (ts.partner(i) != npos && ts.partner(i) > i) {
      for (std::size_t k = i; k <= ts.partner(i); ++k) {
        if (ts[k].kind != Tok::Comment && ts[k].kind != Tok::Newline) cur.push_back(k);
      }
      i = ts.partner(i);
      continue;
    }
    if (angle && ts.is(i, "<")) ++angle_depth;
    if (angle && ts.is(i, ">") && angle_depth > 0) --angle_depth;
    if (ts.is(i, ",") && angle_depth == 0) {
      parts.push_back(std::move(cur));
      cur.clear();
      continue;
    }
    cur.push_back(i);
  }
  if (!cur.empty() || !parts.empty()) parts.push_back(std::move(cur));
  return parts;
}

std::string tokens_text(const TokenStream& ts, const std::vector<std::size_t>& toks,
                        std::size_t from, std::size_t to) {
  if (from >= to || to > toks.size()) return {};
  return text::squash_whitespace(ts.span(toks[from], toks[to - 1]));
}

void push_unique(std::vector<std::string>& list, std::string value) {
  if (std::find(list.begin(), list.end(), value) == list.end()) list.push_back(std::move(value));
}

std::vector<FunctionUnit> finish_units(std::vector<RawUnit> units, const TokenStream& ts,
                                       const SourceFile& file) {
  std::stable_sort(units.begin(), units.end(), [&](const RawUnit& a, const RawUnit& b) {
    return ts[a.decl_first].begin < ts[b.decl_first].begin;
  });
  std::vector<FunctionUnit> out;
  out.reserve(units.size());
  for (auto& r : units) {
    FunctionUnit& u = r.unit;
    u.lang = file.lang;
    u.provenance.repo_id = file.repo_id;
    u.provenance.file_path = file.path;
    u.provenance.line = ts[r.decl_first].line;
    if (u.code_text.empty()) u.code_text = std::string(ts.span(r.decl_first, r.last));
    for (std::size_t k = 0; k < u.signature.params.size(); ++k) u.signature.params[k].position = k;
    out.push_back(std::move(u));
  }
  return out;
}

}  // namespace docsieve::extract
