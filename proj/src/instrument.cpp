#include <algorithm>
#include <map>
#include <tuple>

#include "integdistill/instrument.hpp"
#include "integdistill/parser.hpp"

namespace integdistill {

namespace {

struct CallSite {
  const Expr* call;
  const Stmt* owner;  // innermost statement that sits directly in a block
};

void collect_calls(const Expr& expr, const Stmt& owner, std::vector<CallSite>& out);

void collect_children(const Expr& expr, const Stmt& owner, std::vector<CallSite>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, MemberAccessExpr>) {
          collect_calls(*node.object, owner, out);
        } else if constexpr (std::is_same_v<T, CallExpr>) {
          if (node.receiver) collect_calls(*node.receiver, owner, out);
          for (const auto& a : node.args) collect_calls(*a, owner, out);
        } else if constexpr (std::is_same_v<T, NewExpr>) {
          for (const auto& a : node.args) collect_calls(*a, owner, out);
        } else if constexpr (std::is_same_v<T, UnaryExpr>) {
          collect_calls(*node.operand, owner, out);
        } else if constexpr (std::is_same_v<T, BinaryExpr>) {
          collect_calls(*node.lhs, owner, out);
          collect_calls(*node.rhs, owner, out);
        }
      },
      expr.node);
}

void collect_calls(const Expr& expr, const Stmt& owner, std::vector<CallSite>& out) {
  if (std::holds_alternative<CallExpr>(expr.node)) out.push_back({&expr, &owner});
  collect_children(expr, owner, out);
}

void collect_stmt(const Stmt& stmt, const Stmt& owner, std::vector<CallSite>& out);

// A nested statement owns its calls only when it is itself a block element.
void collect_branch(const Stmt& branch, const Stmt& owner, std::vector<CallSite>& out) {
  if (std::holds_alternative<BlockStmt>(branch.node)) {
    collect_stmt(branch, branch, out);
  } else {
    collect_stmt(branch, owner, out);
  }
}

void collect_stmt(const Stmt& stmt, const Stmt& owner, std::vector<CallSite>& out) {
  std::visit(
      [&](const auto& node) {
        using T = std::decay_t<decltype(node)>;
        if constexpr (std::is_same_v<T, LocalDeclStmt>) {
          for (const auto& d : node.declarators) {
            if (d.init) collect_calls(*d.init, owner, out);
          }
        } else if constexpr (std::is_same_v<T, AssignStmt>) {
          collect_calls(*node.target, owner, out);
          collect_calls(*node.value, owner, out);
        } else if constexpr (std::is_same_v<T, IncDecStmt>) {
          collect_calls(*node.target, owner, out);
        } else if constexpr (std::is_same_v<T, ExprStmt>) {
          collect_calls(*node.expr, owner, out);
        } else if constexpr (std::is_same_v<T, ReturnStmt>) {
          if (node.value) collect_calls(*node.value, owner, out);
        } else if constexpr (std::is_same_v<T, BlockStmt>) {
          for (const auto& s : node.statements) collect_stmt(*s, *s, out);
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          collect_calls(*node.condition, owner, out);
          collect_branch(*node.then_branch, owner, out);
          if (node.else_branch) collect_branch(*node.else_branch, owner, out);
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          collect_calls(*node.condition, owner, out);
          collect_branch(*node.body, owner, out);
        }
      },
      stmt.node);
}

std::vector<CallSite> call_sites(const SyntaxTree& tree) {
  std::vector<CallSite> out;
  for (const auto& cls : tree.classes) {
    for (const auto* group : {&cls.constructors, &cls.methods}) {
      for (const auto& m : *group) {
        for (const auto& s : m.body) collect_stmt(*s, *s, out);
      }
    }
  }
  return out;
}

struct SourceLine {
  std::string_view content;  // without terminator
  std::string_view eol;
};

std::vector<SourceLine> split_lines(std::string_view text) {
  std::vector<SourceLine> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) {
      lines.push_back({text.substr(pos), {}});
      break;
    }
    std::size_t end = nl;
    if (end > pos && text[end - 1] == '\r') --end;
    lines.push_back({text.substr(pos, end - pos), text.substr(end, nl + 1 - end)});
    pos = nl + 1;
  }
  return lines;
}

}  // namespace

ProbeTemplate ProbeTemplate::timing() {
  return {
      {"DateTime start_time{id} = DateTime.Now;"},
      {"TimeSpan timeDiff{id} = DateTime.Now - start_time{id};",
       "Console.WriteLine(\"Line {0} took {1}\", {line}, timeDiff{id}.TotalMilliseconds);"},
  };
}

std::string render_probe_line(std::string_view line, int id, int source_line) {
  std::string out;
  std::size_t pos = 0;
  while (pos < line.size()) {
    if (line.substr(pos, 4) == "{id}") {
      out += std::to_string(id);
      pos += 4;
    } else if (line.substr(pos, 6) == "{line}") {
      out += std::to_string(source_line);
      pos += 6;
    } else {
      out += line[pos++];
    }
  }
  return out;
}

InstrumentationResult instrument(std::string_view source, std::span<const InvocationPoint> points,
                                 const ProbeTemplate& probe, std::string_view path) {
  std::vector<const InvocationPoint*> selected;
  for (const auto& p : points) {
    if (path.empty() || p.file == path) selected.push_back(&p);
  }
  InstrumentationResult result;
  if (selected.empty()) {
    result.text = std::string(source);
    return result;
  }
  std::stable_sort(selected.begin(), selected.end(),
                   [](const InvocationPoint* a, const InvocationPoint* b) {
                     return std::tie(a->line, a->column) < std::tie(b->line, b->column);
                   });

  const std::string file(path);
  SyntaxTree tree = parse(source, path);
  std::vector<CallSite> sites = call_sites(tree);

  // Probes per wrapped statement, in id order.
  std::map<const Stmt*, std::vector<Probe>> wrapped;
  int next_id = 1;
  for (const InvocationPoint* p : selected) {
    auto site = std::find_if(sites.begin(), sites.end(), [&](const CallSite& s) {
      const auto& call = std::get<CallExpr>(s.call->node);
      return s.call->line == p->line && (p->column == 0 || s.call->column == p->column) &&
             call.text == p->call_text;
    });
    if (site == sites.end()) {
      throw InstrumentError("invocation '" + p->call_text + "' not found; source changed since analysis",
                            file, p->line, p->column);
    }
    const Stmt& stmt = *site->owner;
    const auto& toks = tree.tokens;
    std::size_t first = stmt.tokens.first;
    std::size_t last = stmt.tokens.last;
    if ((first > 0 && toks[first - 1].line == toks[first].line) ||
        (last + 1 < toks.size() && toks[last + 1].kind != TokenKind::end_of_file &&
         toks[last + 1].line == toks[last].line)) {
      throw InstrumentError("statement containing '" + p->call_text +
                                "' shares its line with other code",
                            file, stmt.span.start_line, 0);
    }
    Probe pr{next_id++, p->line, p->call_text};
    result.probes.push_back(pr);
    wrapped[&stmt].push_back(std::move(pr));
  }

  std::vector<SourceLine> lines = split_lines(source);
  std::map<int, std::vector<std::string>> before;  // keyed by 1-based line
  std::map<int, std::vector<std::string>> after;
  for (const auto& [stmt, probes] : wrapped) {
    const SourceLine& head = lines[static_cast<std::size_t>(stmt->span.start_line - 1)];
    std::string indent(head.content.substr(0, head.content.find_first_not_of(" \t")));
    std::string eol = head.eol.empty() ? std::string("\n") : std::string(head.eol);
    auto make = [&](const std::string& tmpl, const Probe& pr) {
      std::string text = indent + render_probe_line(tmpl, pr.id, pr.line);
      if (text.find(kProbeMarker) == std::string::npos) {
        text += ' ';
        text += kProbeMarker;
      }
      return text + eol;
    };
    auto& pre = before[stmt->span.start_line];
    for (const auto& pr : probes) {
      for (const auto& t : probe.before) pre.push_back(make(t, pr));
    }
    auto& post = after[stmt->span.end_line];
    for (auto it = probes.rbegin(); it != probes.rend(); ++it) {
      for (const auto& t : probe.after) post.push_back(make(t, *it));
    }
  }

  std::string& out = result.text;
  out.reserve(source.size() + 64 * result.probes.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    int line_no = static_cast<int>(i + 1);
    if (auto it = before.find(line_no); it != before.end()) {
      for (const auto& l : it->second) out += l;
    }
    out += lines[i].content;
    out += lines[i].eol;
    if (auto it = after.find(line_no); it != after.end()) {
      for (const auto& l : it->second) out += l;
    }
  }
  return result;
}

std::string strip(std::string_view source) {
  std::string out;
  out.reserve(source.size());
  for (const auto& line : split_lines(source)) {
    if (line.content.find(kProbeMarker) != std::string_view::npos) continue;
    out += line.content;
    out += line.eol;
  }
  return out;
}

}  // namespace integdistill
