public static int f_gold ( int n ) {
  int res = 0 ;
  int x = 0 ;
  while ( ( x * x < n ) ) {
    res ++ ;
    x ++ ;
  }
  return res ;
}
