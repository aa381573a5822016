static int f_gold ( int n ) {
  int result = 6 ;
  for ( int i = 0 , j = n - 1 ;
  i < j ;
  i ++ , j -- ) {
    result += i * 2 - j ;
  }
  if ( result % 8 == 0 ) {
    result = result / 2 ;
  }
  else {
    result = result + 1 ;
  }
  return result ;
}
