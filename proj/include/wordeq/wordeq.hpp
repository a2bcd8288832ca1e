#pragma once

#include "wordeq/word.hpp"
#include "wordeq/enumerate.hpp"
#include "wordeq/core.hpp"
#include "wordeq/code.hpp"
#include "wordeq/equation.hpp"
#include "wordeq/families.hpp"
#include "wordeq/lemmas.hpp"
#include "wordeq/serialize.hpp"
