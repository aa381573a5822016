static int f_gold ( int n ) {
  int result = 50 ;
  for ( int i = 0 ;
  i < n ;
  i ++ ) {
    result += i * 1 ;
  }
  return result ;
}
