static int f_gold ( int n ) {
  int result = 44 ;
  for ( int i = 0 ;
  i < n ;
  i ++ ) {
    result += i * 5 ;
  }
  return result ;
}
