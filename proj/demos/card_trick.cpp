// Deal a 52-card deck one card to the bottom, three down, and predict which
// cards come out last without dealing.

#include <iostream>
#include <vector>

#include "josephus/closed_form.hpp"
#include "josephus/game.hpp"

int main() {
    using namespace josephus;
    constexpr Count deck = 52;
    constexpr Count down = 3;

    std::vector<Label> by_time(deck);
    for (Label card = 0; card < deck; ++card) by_time[elim_time_t2(deck, down, card) - 1] = card;

    std::cout << "predicted last four:";
    for (Count i = deck - 4; i < deck; ++i) std::cout << ' ' << by_time[i];
    std::cout << '\n';

    const auto dealt = run({deck, down, 1}, RunMode::Depletion).order_labels();
    std::cout << "dealt last four:    ";
    for (Count i = deck - 4; i < deck; ++i) std::cout << ' ' << dealt[i];
    std::cout << '\n';
    return dealt == by_time ? 0 : 1;
}
