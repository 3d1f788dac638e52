/* The public header must compile as C. */
#include "netmet/netmet.h"

int main(void) {
  netmet_network* x = NULL;
  double d = -1.0;
  if (netmet_constant_network(3, 1.0, &x) != NETMET_OK) return 1;
  if (netmet_exact_distance(x, x, 7, 1, &d, NULL) != NETMET_OK) return 1;
  netmet_network_free(x);
  return d == 0.0 ? 0 : 1;
}
