#include "ktsim/lb/programs.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

namespace ktsim::lb {

namespace {

constexpr std::uint16_t kPing = 50;
constexpr std::uint16_t kIdTag = 51;

struct Ordinal {
  std::size_t smaller = 0;
  std::size_t larger = 0;
};

Ordinal ordinal(const NodeContext& ctx) {
  Ordinal o;
  for (Vertex u : ctx.neighbors()) (ctx.id_of(u) < ctx.id() ? o.smaller : o.larger) += 1;
  return o;
}

std::string summary(const Ordinal& o) { return fmt::format("lt={};gt={}", o.smaller, o.larger); }

class LocalRule final : public Protocol {
 public:
  explicit LocalRule(Fixture f) : f_(f) {}
  void on_round(NodeContext& ctx) override {
    const Ordinal o = ordinal(ctx);
    ctx.record_state(summary(o));
    std::int64_t out = 0;
    switch (f_) {
      case Fixture::order_coloring: out = o.smaller == 0 ? 1 : (o.larger == 0 ? 3 : 2); break;
      case Fixture::mis_middle: out = o.smaller > 0 && o.larger > 0; break;
      case Fixture::mis_extremes: out = o.smaller == 0 || o.larger == 0; break;
      default: break;
    }
    ctx.set_output(out);
    ctx.halt();
  }

 private:
  Fixture f_;
};

class Flooding final : public Protocol {
 public:
  void on_round(NodeContext& ctx) override {
    if (ctx.round() == 1) {
      ctx.record_state(summary(ordinal(ctx)));
      ctx.send_all(Message::make(kIdTag, 32).with_id(ctx.id()));
      return;
    }
    std::size_t heard = 0;
    for (const auto& e : ctx.inbox())
      for (IdValue id : e.msg.id_fields()) {
        ++heard;
        ctx.send_all(Message::make(kIdTag, 32).with_id(id));
      }
    ctx.record_state(fmt::format("heard={}", heard));
    ctx.set_output(0);
    ctx.halt();
  }
};

class MinNeighborPing final : public Protocol {
 public:
  void on_round(NodeContext& ctx) override {
    const Ordinal o = ordinal(ctx);
    if (ctx.round() == 1) {
      ctx.record_state(summary(o));
      if (o.smaller == 0 && ctx.degree() > 0) {
        auto nb = ctx.neighbors();
        Vertex best = nb.front();
        for (Vertex u : nb)
          if (ctx.id_of(u) < ctx.id_of(best)) best = u;
        ctx.send(best, Message::make(kPing, 1));
      }
      return;
    }
    ctx.record_state(fmt::format("{};pings={}", summary(o), ctx.inbox().size()));
    ctx.set_output(o.smaller == 0 ? 1 : (o.larger == 0 ? 3 : 2));
    ctx.halt();
  }
};

class Fabricating final : public Protocol {
 public:
  void on_round(NodeContext& ctx) override {
    ctx.send_all(Message::make(kIdTag, 32).with_id(ctx.id() + 1));
    ctx.set_output(0);
    ctx.halt();
  }
};

constexpr std::array<std::pair<Fixture, std::string_view>, 7> kNames{{
    {Fixture::silent, "silent"},
    {Fixture::order_coloring, "order-coloring"},
    {Fixture::mis_middle, "mis-middle"},
    {Fixture::mis_extremes, "mis-extremes"},
    {Fixture::flooding, "flooding"},
    {Fixture::min_neighbor_ping, "min-neighbor-ping"},
    {Fixture::fabricating, "fabricating"},
}};

}  // namespace

OutputKind output_kind(Fixture f) {
  switch (f) {
    case Fixture::order_coloring:
    case Fixture::min_neighbor_ping: return OutputKind::coloring;
    case Fixture::mis_middle:
    case Fixture::mis_extremes: return OutputKind::mis;
    default: return OutputKind::none;
  }
}

std::string_view fixture_name(Fixture f) {
  for (const auto& [k, name] : kNames)
    if (k == f) return name;
  return "?";
}

Fixture fixture_from_name(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  throw std::invalid_argument(fmt::format("unknown program '{}'", name));
}

std::unique_ptr<Protocol> make_fixture(Fixture f, std::size_t) {
  switch (f) {
    case Fixture::silent:
    case Fixture::order_coloring:
    case Fixture::mis_middle:
    case Fixture::mis_extremes: return std::make_unique<LocalRule>(f);
    case Fixture::flooding: return std::make_unique<Flooding>();
    case Fixture::min_neighbor_ping: return std::make_unique<MinNeighborPing>();
    case Fixture::fabricating: return std::make_unique<Fabricating>();
  }
  throw std::invalid_argument("make_fixture: unknown fixture");
}

}  // namespace ktsim::lb
