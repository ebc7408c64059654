#include "repairkit/dfg.hpp"

#include <algorithm>
#include <set>
#include <string>
#include <tuple>
#include <unordered_map>
#include <unordered_set>

namespace repairkit {

namespace {

bool is_assign_kind(const std::string& kind) {
  return kind == node_kind::assign_expr || kind == node_kind::add_assign_expr ||
         kind == node_kind::sub_assign_expr ||
         kind == node_kind::mul_assign_expr ||
         kind == node_kind::div_assign_expr;
}

bool is_compound_assign_kind(const std::string& kind) {
  return is_assign_kind(kind) && kind != node_kind::assign_expr;
}

class DfgBuilder {
 public:
  DataFlowGraph build(const SyntaxTree& tree) {
    Scope top;
    for (const auto& item : tree.root.children) {
      if (item.kind == node_kind::function_def) {
        Scope fn;
        process_function(item, fn);
      } else if (item.kind == node_kind::function_decl) {
        // prototype: no body, no flows
      } else {
        process_stmt(item, top);
      }
    }
    DataFlowGraph g;
    g.slot_count = next_slot_;
    g.edges = std::move(edges_);
    std::sort(g.edges.begin(), g.edges.end());
    return g;
  }

 private:
  // One scope per function body; variable names resolve within it.
  struct Scope {
    std::unordered_map<std::string, uint32_t> slots;
    std::unordered_set<uint32_t> defined;
  };

  uint32_t next_slot_ = 0;
  std::vector<std::pair<uint32_t, uint32_t>> edges_;
  // One edge per read site; keeps the loop refinement pass from
  // double-counting statements it rescans.
  std::set<std::tuple<const SyntaxNode*, uint32_t, uint32_t>> emitted_;

  uint32_t slot_of(Scope& sc, const std::string& name) {
    auto it = sc.slots.find(name);
    if (it != sc.slots.end()) return it->second;
    uint32_t s = next_slot_++;
    sc.slots.emplace(name, s);
    return s;
  }

  void emit(Scope& sc, const SyntaxNode* site, uint32_t src, uint32_t dst) {
    if (!sc.defined.count(src)) return;
    auto key = std::make_tuple(site, src, dst);
    if (!emitted_.insert(key).second) return;
    edges_.emplace_back(src, dst);
  }

  void process_function(const SyntaxNode& fn, Scope& sc) {
    const SyntaxNode* body = nullptr;
    for (const auto& child : fn.children) {
      if (child.kind == node_kind::param_list) {
        for (const auto& param : child.children) {
          const SyntaxNode* name = nullptr;
          for (const auto& pc : param.children) {
            if (pc.kind == node_kind::identifier) name = &pc;
          }
          if (name) {
            uint32_t s = slot_of(sc, name->leaf_lexeme);
            sc.defined.insert(s);
          }
        }
      } else if (child.kind == node_kind::compound) {
        body = &child;
      }
    }
    if (body) process_stmt(*body, sc);
  }

  // ---- statements ----

  void process_stmt(const SyntaxNode& stmt, Scope& sc) {
    const std::string& kind = stmt.kind;

    if (kind == node_kind::compound) {
      for (const auto& child : stmt.children) process_stmt(child, sc);
      return;
    }
    if (kind == node_kind::declaration) {
      for (const auto& child : stmt.children) {
        if (child.kind == node_kind::init_declarator)
          process_init_declarator(child, sc);
      }
      return;
    }
    if (kind == node_kind::expr_stmt) {
      discard_reads(stmt.children.front(), sc);
      return;
    }
    if (kind == node_kind::if_stmt) {
      discard_reads(stmt.children[0], sc);
      auto before = sc.defined;
      process_stmt(stmt.children[1], sc);
      auto after_then = sc.defined;
      if (stmt.children.size() > 2) {
        sc.defined = before;
        process_stmt(stmt.children[2], sc);
      } else {
        sc.defined = before;
      }
      // union of both arms at the join
      sc.defined.insert(after_then.begin(), after_then.end());
      return;
    }
    if (kind == node_kind::while_stmt) {
      for (int pass = 0; pass < 2; ++pass) {
        discard_reads(stmt.children[0], sc);
        process_stmt(stmt.children[1], sc);
      }
      return;
    }
    if (kind == node_kind::for_stmt) {
      const SyntaxNode* cond = nullptr;
      const SyntaxNode* step = nullptr;
      const SyntaxNode* body = &stmt.children.back();
      for (const auto& child : stmt.children) {
        if (child.kind == node_kind::for_init) {
          const SyntaxNode& inner = child.children.front();
          if (inner.kind == node_kind::declaration) {
            process_stmt(inner, sc);
          } else {
            discard_reads(inner, sc);
          }
        } else if (child.kind == node_kind::for_cond) {
          cond = &child.children.front();
        } else if (child.kind == node_kind::for_step) {
          step = &child.children.front();
        }
      }
      for (int pass = 0; pass < 2; ++pass) {
        if (cond) discard_reads(*cond, sc);
        process_stmt(*body, sc);
        if (step) discard_reads(*step, sc);
      }
      return;
    }
    if (kind == node_kind::return_stmt) {
      if (!stmt.children.empty()) discard_reads(stmt.children.front(), sc);
      return;
    }
    if (kind == node_kind::function_def) {
      Scope inner;
      process_function(stmt, inner);
      return;
    }
    // break/continue/empty statements and anything unrecognized: no flows
  }

  void process_init_declarator(const SyntaxNode& decl, Scope& sc) {
    const SyntaxNode* name = nullptr;
    const SyntaxNode* init = nullptr;
    for (const auto& child : decl.children) {
      if (child.kind == node_kind::identifier && !name) {
        name = &child;
      } else if (child.kind == node_kind::initializer) {
        init = &child;
      }
      // array-suffix dimensions are sizes, not value flow
    }
    if (!name) return;
    uint32_t target = slot_of(sc, name->leaf_lexeme);
    if (init) {
      std::vector<const SyntaxNode*> reads;
      collect_reads(init->children.front(), sc, reads);
      for (const SyntaxNode* r : reads)
        emit(sc, r, sc.slots.at(r->leaf_lexeme), target);
      sc.defined.insert(target);
    }
  }

  // Evaluate an expression whose own reads feed no target (conditions,
  // return values, bare calls). Nested assignments still execute.
  void discard_reads(const SyntaxNode& expr, Scope& sc) {
    std::vector<const SyntaxNode*> reads;
    collect_reads(expr, sc, reads);
  }

  // ---- expressions ----

  // Appends the identifier nodes this expression reads, in textual order.
  // Assignments and ++/-- inside are executed: they emit their own edges,
  // mark their target defined, and surface the target as the value read by
  // the surrounding expression.
  void collect_reads(const SyntaxNode& expr, Scope& sc,
                     std::vector<const SyntaxNode*>& out) {
    const std::string& kind = expr.kind;

    if (kind == node_kind::identifier) {
      slot_of(sc, expr.leaf_lexeme);
      out.push_back(&expr);
      return;
    }
    if (expr.is_leaf()) return;

    if (is_assign_kind(kind)) {
      const SyntaxNode* target = execute_assignment(expr, sc);
      if (target) out.push_back(target);
      return;
    }
    if (kind == node_kind::unary_expr) {
      const SyntaxNode& op = expr.children[0];
      const SyntaxNode& operand = expr.children[1];
      if (op.leaf_lexeme == "++" || op.leaf_lexeme == "--") {
        const SyntaxNode* target = execute_incdec(operand, sc);
        if (target) out.push_back(target);
        return;
      }
      if (op.leaf_lexeme == "sizeof") return;  // operand is not evaluated
      collect_reads(operand, sc, out);
      return;
    }
    if (kind == node_kind::postfix_expr) {
      const SyntaxNode* target = execute_incdec(expr.children[0], sc);
      if (target) out.push_back(target);
      return;
    }
    if (kind == node_kind::call_expr) {
      // a bare identifier callee is a function name, not a variable
      const SyntaxNode& callee = expr.children[0];
      if (callee.kind != node_kind::identifier) collect_reads(callee, sc, out);
      for (size_t i = 1; i < expr.children.size(); ++i)
        collect_reads(expr.children[i], sc, out);
      return;
    }
    if (kind == node_kind::member_expr) {
      collect_reads(expr.children[0], sc, out);  // field name is not a read
      return;
    }
    if (kind == node_kind::cast_expr) {
      collect_reads(expr.children.back(), sc, out);
      return;
    }
    // binary, ternary, index, paren, init-list, initializer: plain traversal
    for (const auto& child : expr.children) collect_reads(child, sc, out);
  }

  // Resolves the variable behind an lvalue. Reads performed while locating
  // it (array subscripts) land in `reads`.
  const SyntaxNode* lvalue_base(const SyntaxNode& expr, Scope& sc,
                                std::vector<const SyntaxNode*>& reads) {
    const std::string& kind = expr.kind;
    if (kind == node_kind::identifier) {
      slot_of(sc, expr.leaf_lexeme);
      return &expr;
    }
    if (kind == node_kind::paren_expr)
      return lvalue_base(expr.children[0], sc, reads);
    if (kind == node_kind::unary_expr && expr.children[0].leaf_lexeme == "*")
      return lvalue_base(expr.children[1], sc, reads);
    if (kind == node_kind::index_expr) {
      const SyntaxNode* base = lvalue_base(expr.children[0], sc, reads);
      collect_reads(expr.children[1], sc, reads);
      return base;
    }
    if (kind == node_kind::member_expr)
      return lvalue_base(expr.children[0], sc, reads);
    if (kind == node_kind::cast_expr)
      return lvalue_base(expr.children.back(), sc, reads);
    return nullptr;
  }

  // Returns the target identifier node, or null when the left side has no
  // resolvable variable.
  const SyntaxNode* execute_assignment(const SyntaxNode& assign, Scope& sc) {
    const SyntaxNode& lhs = assign.children[0];
    const SyntaxNode& rhs = assign.children[1];

    std::vector<const SyntaxNode*> reads;
    const SyntaxNode* target = lvalue_base(lhs, sc, reads);
    if (!target) {
      // no variable to define: evaluate both sides for nested effects
      collect_reads(lhs, sc, reads);
      collect_reads(rhs, sc, reads);
      return nullptr;
    }
    if (is_compound_assign_kind(assign.kind)) reads.push_back(target);
    collect_reads(rhs, sc, reads);

    uint32_t t = sc.slots.at(target->leaf_lexeme);
    for (const SyntaxNode* r : reads)
      emit(sc, r, sc.slots.at(r->leaf_lexeme), t);
    sc.defined.insert(t);
    return target;
  }

  const SyntaxNode* execute_incdec(const SyntaxNode& operand, Scope& sc) {
    std::vector<const SyntaxNode*> reads;
    const SyntaxNode* target = lvalue_base(operand, sc, reads);
    if (!target) {
      collect_reads(operand, sc, reads);
      return nullptr;
    }
    reads.push_back(target);  // old value feeds the new one
    uint32_t t = sc.slots.at(target->leaf_lexeme);
    for (const SyntaxNode* r : reads)
      emit(sc, r, sc.slots.at(r->leaf_lexeme), t);
    sc.defined.insert(t);
    return target;
  }
};

}  // namespace

DataFlowGraph extract_dfg(const SyntaxTree& tree) {
  return DfgBuilder().build(tree);
}

}  // namespace repairkit
