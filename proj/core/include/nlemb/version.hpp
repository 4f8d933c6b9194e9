#pragma once

#define NLEMB_VERSION_MAJOR 0
#define NLEMB_VERSION_MINOR 1
#define NLEMB_VERSION_PATCH 0
#define NLEMB_VERSION_STRING "0.1.0"
