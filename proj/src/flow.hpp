#ifndef UGN_SRC_FLOW_HPP_
#define UGN_SRC_FLOW_HPP_

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/edmonds_karp_max_flow.hpp>

#include <cstddef>
#include <queue>
#include <vector>

namespace ugn::detail {

  // Integer max flow through Boost's Edmonds-Karp. Out-edges are kept in
  // insertion order, so augmenting paths and results are deterministic.
  class MaxFlow {
    using Traits = boost::adjacency_list_traits<boost::vecS, boost::vecS, boost::directedS>;

   public:
    using EdgeId = Traits::edge_descriptor;

    explicit MaxFlow(std::size_t n) : _g(n) {}

    EdgeId add_edge(std::size_t from, std::size_t to, long cap) {
      auto e = boost::add_edge(from, to, _g).first;
      auto r = boost::add_edge(to, from, _g).first;
      _g[e]  = {cap, 0, r};
      _g[r]  = {0, 0, e};
      return e;
    }

    long run(std::size_t s, std::size_t t) {
      return boost::edmonds_karp_max_flow(
          _g, s, t,
          boost::capacity_map(boost::get(&Arc::cap, _g))
              .residual_capacity_map(boost::get(&Arc::residual, _g))
              .reverse_edge_map(boost::get(&Arc::reverse, _g)));
    }

    long residual(EdgeId e) const {
      return _g[e].residual;
    }

    // Vertices reachable from s in the residual graph (the source side of a
    // minimum cut once run() has finished).
    std::vector<bool> reachable(std::size_t s) const {
      std::vector<bool>       seen(boost::num_vertices(_g), false);
      std::queue<std::size_t> q;
      seen[s] = true;
      q.push(s);
      while (!q.empty()) {
        auto v = q.front();
        q.pop();
        for (auto [it, end] = boost::out_edges(v, _g); it != end; ++it) {
          auto w = boost::target(*it, _g);
          if (_g[*it].residual > 0 && !seen[w]) {
            seen[w] = true;
            q.push(w);
          }
        }
      }
      return seen;
    }

   private:
    struct Arc {
      long   cap;
      long   residual;
      EdgeId reverse;
    };
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::directedS,
                                        boost::no_property, Arc>;
    Graph _g;
  };

}  // namespace ugn::detail

#endif  // UGN_SRC_FLOW_HPP_
