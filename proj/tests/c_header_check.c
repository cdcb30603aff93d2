/* The public header must compile as C. */
#include <stdio.h>

#include "dessins/dessins.h"

int main(void) {
  dsn_dessin *d = NULL;
  int genus = -1;
  const int s0[] = {0}, s1[] = {0};
  if (dsn_dessin_new(1, s0, s1, &d) != DSN_OK)
    return 1;
  if (dsn_dessin_genus(d, &genus) != DSN_OK || genus != 0)
    return 1;
  dsn_dessin_free(d);
  puts("ok");
  return 0;
}
