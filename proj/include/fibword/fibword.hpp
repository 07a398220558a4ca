#pragma once

#include "fibword/conjugacy.hpp"
#include "fibword/dawg.hpp"
#include "fibword/error.hpp"
#include "fibword/frames.hpp"
#include "fibword/io.hpp"
#include "fibword/locator.hpp"
#include "fibword/oracle.hpp"
#include "fibword/word1d.hpp"
#include "fibword/word2d.hpp"
