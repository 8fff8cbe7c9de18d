// Walks through the library on a few small graphs.

#include <iostream>

#include "bglink/bglink.hpp"

using namespace bglink;

int main() {
    const BipartiteGraph theta = complete_graph(3, 4);
    std::cout << "band word of theta(3,4): " << to_string(band_word_from_graph(theta)) << "\n";
    std::cout << "fingerprint: " << to_json(fingerprint(theta)).dump() << "\n";

    const Partition a({4, 4, 3, 2, 2});
    const Partition d = dual_partition(a);
    std::cout << "dual of (4,4,3,2,2) has parts";
    for (int x : d.parts())
        std::cout << " " << x;
    std::cout << "; same link: " << std::boolalpha
              << (fingerprint(twisted_torus_graph(a)) == fingerprint(twisted_torus_graph(d))) << "\n";

    const SearchOutcome r = adjacency_search(3, 4, complete_graph(2, 6));
    if (r.certificate)
        std::cout << "theta(3,4) -> theta(2,6): " << to_json(*r.certificate)["moves"].dump() << "\n";

    const Fingerprint five_two = braid_fingerprint(BraidWord{3, {1, 1, 1, 2, -1, 2}}, -1);
    const auto cuts = subgraph_search(3, 4, 8, five_two);
    std::cout << cuts.size() << " eight-edge subgraph class(es) of theta(3,4) bound 5_2\n";
    const DensityEstimate est = density_estimate(five_two, 4);
    std::cout << "density of 5_2 is at least " << est.lower_bound << "\n";
}
