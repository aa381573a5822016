static long f_gold ( int n ) {
  long result = 1 ;
  int i = 2 ;
  while ( i <= n && result > 0 ) {
    result = result * i ;
    i ++ ;
  }
  return result ;
}
