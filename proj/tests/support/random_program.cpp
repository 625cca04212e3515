#include "support/random_program.hpp"

#include <random>
#include <sstream>
#include <vector>

namespace testsupport {

namespace {

struct FieldSpec {
  std::string name;
  std::string type;  // "int", "string" or a class name
};

struct MethodSpec {
  std::string name;
  std::vector<std::pair<std::string, std::string>> params;  // type, name
  bool returns_int = false;
};

struct ClassSpec {
  std::string name;
  int base = -1;
  std::vector<FieldSpec> fields;
  std::vector<std::vector<std::pair<std::string, std::string>>> ctors;
  std::vector<MethodSpec> methods;
};

class Generator {
 public:
  Generator(std::uint64_t seed, const GeneratorOptions& o) : rng_(seed), opt_(o) {}

  std::string run() {
    make_classes();
    for (std::size_t i = 0; i < classes_.size(); ++i) emit_class(static_cast<int>(i));
    std::string text = out_.str();
    if (!opt_.crlf) return text;
    std::string crlf;
    for (char c : text) {
      if (c == '\n') crlf += '\r';
      crlf += c;
    }
    return crlf;
  }

 private:
  int pick(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool chance(int percent) { return pick(1, 100) <= percent; }
  template <typename T>
  const T& any(const std::vector<T>& v) {
    return v[static_cast<std::size_t>(pick(0, static_cast<int>(v.size()) - 1))];
  }

  void make_classes() {
    int n = pick(2, opt_.max_classes);
    for (int i = 0; i < n; ++i) {
      ClassSpec c;
      c.name = "K" + std::to_string(i);
      if (i > 0 && chance(30)) c.base = pick(0, i - 1);
      int nf = pick(1, 4);
      for (int f = 0; f < nf; ++f) {
        std::string type = "int";
        if (chance(15)) type = "string";
        else if (i > 0 && chance(20)) type = "K" + std::to_string(pick(0, i - 1));
        c.fields.push_back({"f" + std::to_string(i) + "_" + std::to_string(f), type});
      }
      classes_.push_back(std::move(c));
    }
    for (int i = 0; i < n; ++i) {
      ClassSpec& c = classes_[static_cast<std::size_t>(i)];
      int nc = pick(0, 2);
      for (int k = 0; k < nc; ++k) c.ctors.push_back(random_params(i, k == 0 ? 0 : 2, k));
      int nm = pick(1, opt_.max_methods);
      for (int m = 0; m < nm; ++m) {
        MethodSpec ms;
        ms.name = "m" + std::to_string(i) + "_" + std::to_string(m);
        ms.params = random_params(i, 3);
        ms.returns_int = chance(30);
        c.methods.push_back(std::move(ms));
      }
    }
  }

  std::vector<std::pair<std::string, std::string>> random_params(int owner, int max, int min = 0) {
    std::vector<std::pair<std::string, std::string>> ps;
    int np = pick(min, max);
    for (int p = 0; p < np; ++p) {
      std::string type = "int";
      if (chance(45)) type = "K" + std::to_string(pick(0, static_cast<int>(classes_.size()) - 1));
      else if (chance(10)) type = "string";
      std::string name = "p" + std::to_string(p);
      if (!opt_.shadow_free && chance(20)) {
        const auto& fields = effective_fields(owner);
        if (!fields.empty()) name = any(fields).name;
      }
      ps.emplace_back(type, name);
    }
    return ps;
  }

  std::vector<FieldSpec> effective_fields(int cls) {
    std::vector<FieldSpec> out;
    const ClassSpec& c = classes_[static_cast<std::size_t>(cls)];
    if (c.base >= 0) out = effective_fields(c.base);
    out.insert(out.end(), c.fields.begin(), c.fields.end());
    return out;
  }

  // ---- emission -------------------------------------------------------

  std::string indent(int depth) {
    std::string unit = use_tabs_ ? "\t" : std::string(static_cast<std::size_t>(indent_width_), ' ');
    std::string s;
    for (int i = 0; i < depth; ++i) s += unit;
    return s;
  }

  void line(int depth, const std::string& text) {
    out_ << indent(depth) << text;
    if (opt_.comments && chance(8)) out_ << "  // note f0_0 = 1;";
    if (chance(5)) out_ << "   ";
    out_ << '\n';
    if (chance(4)) out_ << '\n';
    if (opt_.comments && chance(3)) out_ << indent(depth) << "/* this.f0_0++ \"x\" */\n";
  }

  void emit_class(int ci) {
    const ClassSpec& c = classes_[static_cast<std::size_t>(ci)];
    use_tabs_ = chance(50);
    indent_width_ = pick(2, 4);
    if (opt_.comments && chance(40)) out_ << "// class " << c.name << "\n";
    std::string head = "class " + c.name;
    if (c.base >= 0) head += (chance(50) ? " : " : ":") + classes_[static_cast<std::size_t>(c.base)].name;
    if (chance(30)) {
      out_ << head << " {\n";
    } else {
      out_ << head << "\n{\n";
    }
    for (const auto& f : c.fields) {
      std::string mod = chance(50) ? "public " : (chance(50) ? "private " : "");
      std::string init;
      if (f.type == "int" && chance(20)) init = " = " + std::to_string(pick(0, 9));
      line(1, mod + f.type + " " + f.name + init + ";");
    }
    for (const auto& params : c.ctors) {
      cur_class_ = ci;
      cur_params_ = params;
      line(1, "public " + c.name + "(" + param_list(params) + ")");
      emit_body(1, false);
    }
    for (const auto& m : c.methods) {
      cur_class_ = ci;
      cur_params_ = m.params;
      std::string mod = chance(50) ? "public " : (chance(30) ? "private " : "");
      line(1, mod + (m.returns_int ? "int " : "void ") + m.name + "(" + param_list(m.params) + ")");
      emit_body(1, m.returns_int);
    }
    out_ << "}\n";
    if (chance(50)) out_ << "\n";
  }

  std::string param_list(const std::vector<std::pair<std::string, std::string>>& ps) {
    std::string s;
    for (std::size_t i = 0; i < ps.size(); ++i) {
      if (i > 0) s += chance(70) ? ", " : ",";
      s += ps[i].first + " " + ps[i].second;
    }
    return s;
  }

  void emit_body(int depth, bool returns_int) {
    locals_.clear();
    next_local_ = 0;
    line(depth, "{");
    int n = pick(0, opt_.max_statements);
    for (int i = 0; i < n; ++i) emit_statement(depth + 1, 0);
    if (returns_int) line(depth + 1, "return " + int_expr(2) + ";");
    line(depth, "}");
  }

  // Names of int-typed things readable in the current body.
  std::vector<std::string> int_reads() {
    std::vector<std::string> out;
    for (const auto& f : effective_fields(cur_class_)) {
      if (f.type == "int" && !shadowed(f.name)) out.push_back(chance(20) ? "this." + f.name : f.name);
    }
    for (const auto& [t, n] : cur_params_) {
      if (t == "int") out.push_back(n);
    }
    for (const auto& [t, n] : locals_) {
      if (t == "int") out.push_back(n);
    }
    return out;
  }

  bool shadowed(const std::string& name) {
    for (const auto& [t, n] : cur_params_) {
      if (n == name) return true;
    }
    for (const auto& [t, n] : locals_) {
      if (n == name) return true;
    }
    return false;
  }

  std::vector<std::pair<std::string, std::string>> object_receivers() {
    std::vector<std::pair<std::string, std::string>> out;  // class, expression
    for (const auto& f : effective_fields(cur_class_)) {
      if (f.type.front() == 'K' && !shadowed(f.name)) out.emplace_back(f.type, f.name);
    }
    for (const auto& [t, n] : cur_params_) {
      if (t.front() == 'K') out.emplace_back(t, n);
    }
    for (const auto& [t, n] : locals_) {
      if (t.front() == 'K') out.emplace_back(t, n);
    }
    return out;
  }

  std::string int_expr(int depth) {
    auto reads = int_reads();
    if (depth <= 0 || chance(35)) {
      if (reads.empty() || chance(30)) return std::to_string(pick(0, 99));
      return any(reads);
    }
    static const std::vector<std::string> ops = {"+", "-", "*", "/"};
    std::string lhs = int_expr(depth - 1);
    std::string rhs = int_expr(depth - 1);
    if (chance(15)) return "(" + lhs + " " + any(ops) + " " + rhs + ")";
    if (chance(10)) return "(-" + lhs + ")";
    return lhs + (chance(80) ? " " + any(ops) + " " : any(ops)) + rhs;
  }

  std::string cond_expr() {
    static const std::vector<std::string> rel = {"<", ">", "<=", ">=", "==", "!="};
    std::string c = int_expr(1) + " " + any(rel) + " " + int_expr(1);
    if (chance(20)) c = "!(" + c + ")";
    if (chance(20)) c += (chance(50) ? " && " : " || ") + int_expr(0) + " > 0";
    return c;
  }

  std::string args_for(std::size_t n) {
    std::string s;
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) s += ", ";
      s += int_expr(1);
    }
    return s;
  }

  // A call on an object of another class, or Console.
  std::string cross_call() {
    auto recv = object_receivers();
    if (recv.empty() || chance(25)) return "Console.WriteLine(" + int_expr(1) + ")";
    const auto& [cls, expr] = any(recv);
    const ClassSpec& target = classes_[static_cast<std::size_t>(cls[1] - '0')];
    const MethodSpec& m = any(target.methods);
    return expr + "." + m.name + "(" + args_for(m.params.size()) + ")";
  }

  std::string fresh_local() {
    std::string name = "l" + std::to_string(next_local_++);
    if (!opt_.shadow_free && chance(25)) {
      const auto& fields = effective_fields(cur_class_);
      if (!fields.empty()) name = any(fields).name;
    }
    return name;
  }

  void emit_statement(int depth, int nesting) {
    auto fields = effective_fields(cur_class_);
    std::vector<std::string> int_fields;
    for (const auto& f : fields) {
      if (f.type == "int" && !shadowed(f.name)) int_fields.push_back(f.name);
    }
    int kind = pick(0, 12);
    switch (kind) {
      case 0:
      case 1:
        if (!int_fields.empty()) {
          std::string target = any(int_fields);
          if (chance(20)) target = "this." + target;
          static const std::vector<std::string> ops = {"=", "=", "=", "+=", "-=", "*="};
          line(depth, target + (chance(85) ? " " + any(ops) + " " : any(ops)) + int_expr(2) + ";");
          return;
        }
        [[fallthrough]];
      case 2:
        if (!int_fields.empty()) {
          std::string target = any(int_fields);
          int form = pick(0, 3);
          if (form == 0) line(depth, target + "++;");
          else if (form == 1) line(depth, "--" + target + ";");
          else if (form == 2) line(depth, "++this." + target + ";");
          else line(depth, target + "--;");
          return;
        }
        [[fallthrough]];
      case 3: {
        std::string name = fresh_local();
        std::string init = chance(70) ? " = " + int_expr(2) : "";
        line(depth, "int " + name + init + ";");
        locals_.emplace_back("int", name);
        return;
      }
      case 4:
      case 5:
        line(depth, cross_call() + ";");
        return;
      case 6: {
        std::string call = cross_call();
        if (call.rfind("Console", 0) == 0) {
          line(depth, call + ";");
          return;
        }
        std::string name = fresh_local();
        line(depth, "int " + name + " = " + call + ";");
        locals_.emplace_back("int", name);
        return;
      }
      case 7: {
        const ClassSpec& self = classes_[static_cast<std::size_t>(cur_class_)];
        const MethodSpec& m = any(self.methods);
        line(depth, (chance(50) ? "this." : "") + m.name + "(" + args_for(m.params.size()) + ");");
        return;
      }
      case 8: {
        int target = pick(0, static_cast<int>(classes_.size()) - 1);
        const ClassSpec& t = classes_[static_cast<std::size_t>(target)];
        std::size_t arity = t.ctors.empty() ? 0 : any(t.ctors).size();
        std::string name = fresh_local();
        line(depth, t.name + " " + name + " = new " + t.name + "(" + args_for(arity) + ");");
        locals_.emplace_back(t.name, name);
        return;
      }
      case 9:
      case 10:
        if (nesting < 2) {
          line(depth, "if (" + cond_expr() + ")");
          emit_block(depth, nesting + 1);
          if (chance(40)) {
            line(depth, "else");
            emit_block(depth, nesting + 1);
          }
          return;
        }
        [[fallthrough]];
      case 11:
        if (nesting < 2) {
          line(depth, "while (" + cond_expr() + ")");
          emit_block(depth, nesting + 1);
          return;
        }
        [[fallthrough]];
      default:
        line(depth, "Console.Write(\"f0_0 = this.f1_0\");");
        return;
    }
  }

  void emit_block(int depth, int nesting) {
    auto saved = locals_;
    line(depth, "{");
    int n = pick(0, 3);
    for (int i = 0; i < n; ++i) emit_statement(depth + 1, nesting);
    line(depth, "}");
    locals_ = saved;
  }

  std::mt19937_64 rng_;
  GeneratorOptions opt_;
  std::vector<ClassSpec> classes_;
  std::ostringstream out_;
  bool use_tabs_ = false;
  int indent_width_ = 4;
  int cur_class_ = 0;
  std::vector<std::pair<std::string, std::string>> cur_params_;
  std::vector<std::pair<std::string, std::string>> locals_;
  int next_local_ = 0;
};

}  // namespace

std::string random_program(std::uint64_t seed, const GeneratorOptions& options) {
  return Generator(seed, options).run();
}

}  // namespace testsupport
