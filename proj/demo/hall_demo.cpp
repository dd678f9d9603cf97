// Builds the thin scheme of S3 and the scheme of the 4-cycle, then prints a
// Hall pi-subset of each for a few prime sets.

#include <hyperhall/hyperhall.hpp>

#include <algorithm>
#include <iostream>

namespace hh = hyperhall;

namespace
{

void show(const char *name, const hh::AssociationScheme &s)
{
    std::cout << name << ": " << s.n_points() << " points, rank " << s.rank() << ", valencies";
    for (int v : s.valencies())
        std::cout << " " << v;
    std::cout << "\n";
    if (!hh::is_solvable_scheme(s)) {
        std::cout << "  not solvable\n";
        return;
    }
    for (const std::vector<int> &primes : {std::vector<int>{2}, std::vector<int>{3}, std::vector<int>{2, 3}}) {
        hh::PrimeSet pi(primes);
        if (!hh::is_pi_valenced(s, pi)) {
            std::cout << "  " << hh::to_string(pi) << ": not pi-valenced\n";
            continue;
        }
        hh::HallCertificate c = hh::find_hall(s, pi);
        std::cout << "  " << hh::to_string(pi) << ": hall " << hh::to_string(c.hall.relations.elements())
                  << " valency " << c.hall.valency << " index " << c.index << "\n";
    }
}

} // namespace

int main()
{
    // S3 as r^i s^j with index i + 3j; (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b + d)
    std::vector<std::vector<int>> s3(6, std::vector<int>(6));
    for (int x = 0; x < 6; ++x)
        for (int g = 0; g < 6; ++g) {
            int a = x % 3, b = x / 3, c = g % 3, d = g / 3;
            s3[x][g] = (a + (b ? 3 - c : c)) % 3 + 3 * ((b + d) % 2);
        }
    show("S3", hh::from_group(s3));

    // the 4-cycle: relation = graph distance, valencies 1, 2, 1
    std::vector<std::vector<int>> cycle(4, std::vector<int>(4));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y)
            cycle[x][y] = std::min((y - x + 4) % 4, (x - y + 4) % 4);
    show("4-cycle", hh::validate_scheme(cycle));
    return 0;
}
