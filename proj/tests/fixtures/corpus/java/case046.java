static int f_gold ( int n ) {
  int result = 46 ;
  for ( int i = 0 ;
  i < n ;
  i ++ ) {
    result += i * 2 ;
  }
  return result ;
}
