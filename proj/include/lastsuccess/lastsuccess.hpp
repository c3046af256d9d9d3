#ifndef LASTSUCCESS_LASTSUCCESS_HPP
#define LASTSUCCESS_LASTSUCCESS_HPP

#include "lastsuccess/engine.hpp"
#include "lastsuccess/game.hpp"
#include "lastsuccess/markov.hpp"
#include "lastsuccess/oracle.hpp"
#include "lastsuccess/simulate.hpp"
#include "lastsuccess/variants.hpp"

#endif  // LASTSUCCESS_LASTSUCCESS_HPP
