static int f_gold ( int n ) {
  int result = 43 ;
  for ( int i = 0 ;
  i < n ;
  i ++ ) {
    result += i * 4 ;
  }
  return result ;
}
