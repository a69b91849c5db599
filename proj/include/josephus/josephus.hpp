#pragma once

#include "josephus/checked.hpp"
#include "josephus/closed_form.hpp"
#include "josephus/errors.hpp"
#include "josephus/explorer.hpp"
#include "josephus/game.hpp"
#include "josephus/report_io.hpp"
#include "josephus/rings.hpp"
#include "josephus/types.hpp"
