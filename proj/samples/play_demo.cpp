// Plays the solver against itself on a small board, then reads the winner off
// the interface graph and looks for a fixed point of the half turn.

#include <cstdlib>
#include <iostream>

#include "hexpoint/hexpoint.hpp"

using namespace hexpoint;

int main(int argc, char** argv) {
  const int k = argc > 1 ? std::atoi(argv[1]) : 3;
  hex::Board board(k);
  solver::Solver engine(k);
  while (!hex::winner(board)) board = hex::play(board, engine.best_move(board));
  std::cout << hex::format_board(board);
  std::cout << "winner: " << hex::to_char(*hex::winner(board)) << "\n";

  // Fill the rest arbitrarily; the interface graph needs every cell colored.
  hex::Board full = board;
  for (std::size_t i = 0; i < full.size(); ++i) {
    if (full.at_index(i) == hex::Cell::Empty) full = full.with(full.coord(i), hex::Cell::V);
  }
  const auto g = hex::interface_graph(full);
  std::cout << "interface graph: " << g.graph.node_count() << " corners, " << g.graph.edge_count()
            << " sides; winner via interface " << hex::to_char(hex::winner_via_interface(full)) << "\n";

  const auto r = brouwer::fixed_point_2d_hex(funcspec::lookup("rotation180").map, 0.01);
  std::cout << "half turn: (" << r.x << ", " << r.y << ") residual " << r.residual << " at k=" << r.k << "\n";
}
