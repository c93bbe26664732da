#include "eulerode_cli/elaborate.hpp"

#include "eulerode/errors.hpp"

namespace eulerode::cli {

LinDiffOp elaborate(const OpExpr& e, const Bindings& b) {
  using K = OpExpr::Kind;
  switch (e.kind) {
    case K::RationalLit:
      return LinDiffOp::scalar(e.value);
    case K::Param: {
      if (auto it = b.values.find(e.name); it != b.values.end()) return LinDiffOp::scalar(it->second);
      if (b.free && *b.free == e.name) return LinDiffOp::scalar(Coeff::parameter(e.name));
      if (b.free)
        throw Error(ErrorKind::TwoFreeParameters,
                    "'" + e.name + "' is unbound while '" + *b.free + "' is already the free parameter");
      throw Error(ErrorKind::UnboundParameter, "parameter '" + e.name + "' is unbound (bind it or name it free)");
    }
    case K::X:
      return LinDiffOp::x(e.power);
    case K::Dsmall:
      return LinDiffOp::d(e.power);
    case K::Dbig: {
      LinDiffOp out = LinDiffOp::identity();
      for (int i = 0; i < e.power; ++i) out = LinDiffOp::euler() * out;
      return out;
    }
    case K::Negate:
      return -elaborate(e.children.front(), b);
    case K::Sum: {
      LinDiffOp out;
      for (const auto& c : e.children) out = out + elaborate(c, b);
      return out;
    }
    case K::Product: {
      LinDiffOp out = LinDiffOp::identity();
      for (const auto& c : e.children) out = out * elaborate(c, b);
      return out;
    }
  }
  return {};
}

LinDiffOp parse_and_elaborate(const std::string& src, const Bindings& bindings) {
  return elaborate(parse_operator(src), bindings);
}

}  // namespace eulerode::cli
