#include <stdio.h>
#include "simplie.h"
int main(void) {
  SimplieGroupoid *g = NULL;
  if (simplie_groupoid_pair(3, &g) != SIMPLIE_STATUS_OK) return 1;
  char *out = NULL;
  SimplieStatus s = simplie_groupoid_report(g, "Fp:3", &out);
  printf("status %d\n%s\n", s, out);
  simplie_string_free(out);
  simplie_groupoid_free(g);
  return 0;
}
