#include "common.hpp"
#include "docsieve/text.hpp"

namespace docsieve::extract {
namespace {

std::vector<ParamFact> parse_params(const TokenStream& ts, std::size_t lp) {
  auto groups = split_commas(ts, lp, false);
  auto named_form = [&](const std::vector<std::size_t>& g) {
    return g.size() >= 2 && ts.is_ident(g[0]) && !ts.is(g[1], ".");
  };
  bool named = false;
  for (const auto& g : groups) named |= named_form(g);

  std::vector<ParamFact> out;
  if (!named) {
    for (const auto& g : groups) {
      if (g.empty()) continue;
      ParamFact p;
      p.name = "_";
      p.declared_type = tokens_text(ts, g, 0, g.size());
      out.push_back(std::move(p));
    }
    return out;
  }
  std::vector<std::size_t> pending;  // names still waiting for a type
  for (const auto& g : groups) {
    if (g.empty()) continue;
    ParamFact p;
    p.name = std::string(ts.text(g[0]));
    if (g.size() == 1) {
      pending.push_back(out.size());
      out.push_back(std::move(p));
      continue;
    }
    p.declared_type = tokens_text(ts, g, 1, g.size());
    for (std::size_t k : pending) out[k].declared_type = p.declared_type;
    pending.clear();
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

std::vector<FunctionUnit> extract_go(const SourceFile& file) {
  TokenStream ts = lex_c_family(file.text, SourceLang::Go);
  std::vector<RawUnit> units;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    if (ts.partner(i) != npos && ts.partner(i) > i) {
      i = ts.partner(i);
      continue;
    }
    if (!ts.is(i, "func") || ts[i].kind != Tok::Ident) continue;
    std::size_t j = ts.next_sig(i);
    if (ts.is(j, "(")) j = ts.next_sig(ts.partner(j));  // receiver
    if (!ts.is_ident(j)) continue;
    std::size_t name = j;
    j = ts.next_sig(j);
    if (ts.is(j, "[")) j = ts.next_sig(ts.partner(j));  // type parameters
    if (!ts.is(j, "(")) continue;
    std::size_t lp = j;
    std::size_t rp = ts.partner(lp);

    // Result list, then the body brace.
    std::size_t body = npos, last = rp;
    for (std::size_t k = ts.next_sig(rp); k != npos && k < ts.size(); k = ts.next_sig(k)) {
      if (ts[k].line != ts[last].line && !ts.is(last, ",")) break;
      if (ts.is(k, "{")) {
        std::size_t p = ts.prev_sig(k);
        if (ts.is(p, "interface") || ts.is(p, "struct")) {
          last = ts.partner(k);
          k = last;
          continue;
        }
        body = k;
        break;
      }
      if (ts.is(k, ";") || ts.is(k, "}") || ts.is(k, ")")) break;
      if (ts.partner(k) != npos && ts.partner(k) > k) {
        last = ts.partner(k);
        k = last;
        continue;
      }
      last = k;
    }
    RawUnit r;
    r.attach_first = r.decl_first = i;
    auto& sig = r.unit.signature;
    sig.function_name = std::string(ts.text(name));
    sig.params = parse_params(ts, lp);
    if (last != rp) {
      std::size_t from = ts.next_sig(rp);
      std::string result = text::squash_whitespace(ts.span(from, last));
      bool empty_parens = ts.is(from, "(") && ts.partner(from) == ts.next_sig(from);
      if (!empty_parens) {
        sig.return_type = result;
        sig.returns_value = true;
      }
    }
    r.last = body != npos ? ts.partner(body) : last;
    r.unit.raw_comment = line_run_before(
        ts, i, [](std::string_view tx) { return tx.substr(0, 2) == "//"; });
    units.push_back(std::move(r));
    if (body != npos) i = ts.partner(body);
  }
  return finish_units(std::move(units), ts, file);
}

}  // namespace docsieve::extract
