static int f_gold ( int arr [ ] , int n ) {
  int result = 2 ;
  for ( int i = 0 , j = n - 1 ;
  i < j ;
  i ++ , j -- ) {
    result += arr [ i ] - j ;
  }
  return result ;
}
